#include "caylab/named_graphs.hpp"

namespace caylab {

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    Graph g = Graph::from_edges(n, e, {}, "C" + std::to_string(n));
    g.vertex_transitive = true;
    return g;
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph::from_edges(n, e, {}, "P" + std::to_string(n));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    Graph g = Graph::from_edges(n, e, {}, "K" + std::to_string(n));
    g.vertex_transitive = true;
    return g;
}

Graph hypercube(int d) {
    if (d < 0 || d > 16) throw parse_error("hypercube dimension out of range");
    int n = 1 << d;
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (!(v & (1 << b))) e.push_back({v, v | (1 << b)});
    Graph g = Graph::from_edges(n, e, {}, "Q" + std::to_string(d));
    g.vertex_transitive = true;
    return g;
}

Graph generalized_petersen(int n, int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        e.push_back({i, (i + 1) % n});
        e.push_back({n + i, n + (i + k) % n});
        e.push_back({i, n + i});
    }
    Graph g = Graph::from_edges(2 * n, e, {},
                                "GP(" + std::to_string(n) + "," + std::to_string(k) + ")");
    return g;
}

} // namespace caylab
