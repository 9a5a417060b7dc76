#include "caylab/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace caylab {

int Bitset::count() const {
    int c = 0;
    for (uint64_t x : w_) c += __builtin_popcountll(x);
    return c;
}

int Bitset::count_and(const Bitset& o) const {
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += __builtin_popcountll(w_[i] & o.w_[i]);
    return c;
}

bool Bitset::intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

void Bitset::operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
}

void Bitset::operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
}

void Bitset::and_not(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
}

int Bitset::first_set() const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
    return -1;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<int>& loops, std::string name) {
    if (n < 0 || n > kMaxVertices) throw parse_error("vertex count out of range");
    Graph g;
    g.n = n;
    g.name = std::move(name);
    g.adj.assign(n, Bitset(n));
    g.nbr.assign(n, {});
    g.loop.assign(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw parse_error("edge endpoint out of range");
        if (u == v) throw parse_error("loops must be passed via the loop list");
        if (g.adj[u].test(v)) continue;
        g.adj[u].set(v);
        g.adj[v].set(u);
        ++g.m;
    }
    for (int v = 0; v < n; ++v)
        g.adj[v].for_each([&](int u) { g.nbr[v].push_back(u); });
    for (int v : loops) {
        if (v < 0 || v >= n) throw parse_error("loop vertex out of range");
        g.loop[v] = 1;
    }
    return g;
}

long long Graph::loop_count() const {
    long long c = 0;
    for (uint8_t l : loop) c += l;
    return c;
}

bool Graph::is_regular(int* deg_out) const {
    if (n == 0) return true;
    int d = degree(0);
    for (int v = 1; v < n; ++v)
        if (degree(v) != d) return false;
    if (deg_out) *deg_out = d;
    return true;
}

int Graph::induced_max_degree(const std::vector<int>& s) const {
    Bitset b(n);
    for (int v : s) b.set(v);
    return induced_max_degree(b);
}

int Graph::induced_max_degree(const Bitset& s) const {
    int best = 0;
    s.for_each([&](int v) {
        int d = adj[v].count_and(s) + 2 * loop[v];
        if (d > best) best = d;
    });
    return best;
}

bool Graph::connected() const {
    if (n == 0) return true;
    std::vector<uint8_t> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : nbr[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++cnt;
                q.push(u);
            }
    }
    return cnt == n;
}

std::optional<std::vector<int8_t>> Graph::bipartition() const {
    std::vector<int8_t> col(n, -1);
    for (int r = 0; r < n; ++r) {
        if (col[r] != -1) continue;
        col[r] = 0;
        std::queue<int> q;
        q.push(r);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (loop[v]) return std::nullopt;
            for (int u : nbr[v]) {
                if (col[u] == -1) {
                    col[u] = int8_t(1 - col[v]);
                    q.push(u);
                } else if (col[u] == col[v])
                    return std::nullopt;
            }
        }
    }
    return col;
}

int Graph::girth() const {
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (best != -1 && 2 * dist[v] >= best) break;
            for (int u : nbr[v]) {
                if (dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    q.push(u);
                } else if (u != parent[v]) {
                    int c = dist[v] + dist[u] + 1;
                    if (best == -1 || c < best) best = c;
                }
            }
        }
    }
    return best;
}

std::string Graph::canonical_serialize() const {
    std::ostringstream out;
    out << "graph " << n << ' ' << m << '\n';
    for (int u = 0; u < n; ++u)
        for (int v : nbr[u])
            if (u < v) out << u << ' ' << v << '\n';
    for (int v = 0; v < n; ++v)
        if (loop[v]) out << "loop " << v << '\n';
    return out.str();
}

std::string Graph::fingerprint() const { return sha256_hex(canonical_serialize()); }

Graph Graph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    if (!(in >> tok) || tok != "graph") throw parse_error("expected 'graph' header");
    int n;
    long long m;
    if (!(in >> n >> m)) throw parse_error("bad graph header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(size_t(m));
    std::vector<int> loops;
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw parse_error("truncated edge list");
        edges.push_back({u, v});
    }
    while (in >> tok) {
        if (tok != "loop") throw parse_error("unexpected token: " + tok);
        int v;
        if (!(in >> v)) throw parse_error("truncated loop list");
        loops.push_back(v);
    }
    return from_edges(n, edges, loops);
}

std::string Graph::to_dot() const {
    std::ostringstream out;
    out << "graph G {\n";
    for (int u = 0; u < n; ++u)
        for (int v : nbr[u])
            if (u < v) out << "  " << u << " -- " << v << ";\n";
    for (int v = 0; v < n; ++v)
        if (loop[v]) out << "  " << v << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

Graph kronecker_double_cover(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(size_t(2 * g.m + g.loop_count()));
    for (int u = 0; u < g.n; ++u)
        for (int v : g.nbr[u])
            if (u < v) {
                edges.push_back({u, v + g.n});
                edges.push_back({v, u + g.n});
            }
    for (int v = 0; v < g.n; ++v)
        if (g.loop[v]) edges.push_back({v, v + g.n});
    Graph c = Graph::from_edges(2 * g.n, edges, {}, "cover(" + g.name + ")");
    c.vertex_transitive = g.vertex_transitive;
    return c;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.loop_count() || h.loop_count())
        throw parse_error("cartesian_product does not accept loops");
    if (1LL * g.n * h.n > kMaxVertices) throw parse_error("product too large");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.nbr[u])
            if (u < v)
                for (int w = 0; w < h.n; ++w) edges.push_back({u * h.n + w, v * h.n + w});
    for (int u = 0; u < h.n; ++u)
        for (int v : h.nbr[u])
            if (u < v)
                for (int w = 0; w < g.n; ++w) edges.push_back({w * h.n + u, w * h.n + v});
    Graph p = Graph::from_edges(g.n * h.n, edges, {}, g.name + "[]" + h.name);
    p.vertex_transitive = g.vertex_transitive && h.vertex_transitive;
    return p;
}

bool is_covering_map(const Graph& cover, const Graph& base, const std::vector<int>& f) {
    if (int(f.size()) != cover.n) return false;
    for (int x = 0; x < cover.n; ++x)
        if (f[x] < 0 || f[x] >= base.n) return false;
    if (cover.loop_count()) return false; // a cover of a loop is a matching edge
    for (int x = 0; x < cover.n; ++x) {
        int b = f[x];
        // closed neighborhood downstairs: neighbors, plus b itself if looped
        std::vector<int> want(base.nbr[b]);
        if (base.loop[b]) want.push_back(b);
        std::vector<int> got;
        got.reserve(cover.nbr[x].size());
        for (int y : cover.nbr[x]) got.push_back(f[y]);
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        if (want != got) return false;
    }
    return true;
}

} // namespace caylab
