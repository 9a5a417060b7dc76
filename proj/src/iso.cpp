#include "caylab/iso.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace caylab {

namespace {

// joint 1-dimensional Weisfeiler-Leman refinement; returns stable colors for
// both graphs (same palette) or nullopt if the color histograms ever diverge
std::optional<std::pair<std::vector<int>, std::vector<int>>> refine(const Graph& a,
                                                                    const Graph& b) {
    std::vector<int> ca(a.n), cb(b.n);
    for (int v = 0; v < a.n; ++v) ca[v] = a.degree(v) * 2 + a.loop[v];
    for (int v = 0; v < b.n; ++v) cb[v] = b.degree(v) * 2 + b.loop[v];
    for (int round = 0; round < a.n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> palette;
        auto signature = [&](const Graph& g, const std::vector<int>& c, int v) {
            std::vector<int> s;
            s.reserve(g.nbr[v].size());
            for (int u : g.nbr[v]) s.push_back(c[u]);
            std::sort(s.begin(), s.end());
            return std::make_pair(c[v], std::move(s));
        };
        std::vector<int> na(a.n), nb(b.n);
        for (int v = 0; v < a.n; ++v) {
            auto key = signature(a, ca, v);
            auto it = palette.find(key);
            na[v] = it == palette.end() ? palette.emplace(key, int(palette.size())).first->second
                                        : it->second;
        }
        for (int v = 0; v < b.n; ++v) {
            auto key = signature(b, cb, v);
            auto it = palette.find(key);
            if (it == palette.end()) return std::nullopt; // color unseen on the left
            nb[v] = it->second;
        }
        std::vector<int> ha(palette.size(), 0), hb(palette.size(), 0);
        for (int c : na) ++ha[c];
        for (int c : nb) ++hb[c];
        if (ha != hb) return std::nullopt;
        bool stable = na == ca && nb == cb;
        ca = std::move(na);
        cb = std::move(nb);
        if (stable) break;
    }
    return std::make_pair(ca, cb);
}

struct Searcher {
    const Graph& a;
    const Graph& b;
    const std::vector<int>& ca;
    const std::vector<int>& cb;
    std::vector<int> order;   // vertices of `a`, BFS so each has a mapped neighbor
    std::vector<int> f;       // partial map a -> b
    Bitset used;              // images taken in b
    Bitset assigned_a;        // domain vertices already mapped
    long long nodes = 0, node_limit;
    bool found = false;

    Searcher(const Graph& a_, const Graph& b_, const std::vector<int>& ca_,
             const std::vector<int>& cb_, long long lim)
        : a(a_), b(b_), ca(ca_), cb(cb_), f(a_.n, -1), used(b_.n), assigned_a(a_.n),
          node_limit(lim) {
        std::vector<uint8_t> seen(a.n, 0);
        for (int r = 0; r < a.n; ++r) {
            if (seen[r]) continue;
            std::queue<int> q;
            q.push(r);
            seen[r] = 1;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                order.push_back(v);
                for (int u : a.nbr[v])
                    if (!seen[u]) {
                        seen[u] = 1;
                        q.push(u);
                    }
            }
        }
    }

    bool dfs(size_t pos) {
        if (pos == order.size()) return true;
        if (++nodes > node_limit) return false;
        int u = order[pos];
        // image must be adjacent in b exactly to the images of u's already
        // mapped neighbors, and to no other mapped vertex
        Bitset want(b.n);
        for (int w : a.nbr[u])
            if (f[w] != -1) want.set(f[w]);
        for (int v = 0; v < b.n; ++v) {
            if (used.test(v) || cb[v] != ca[u] || b.loop[v] != a.loop[u]) continue;
            Bitset seen_nbrs(b.n);
            seen_nbrs = b.adj[v];
            seen_nbrs &= used;
            if (!(seen_nbrs == want)) continue;
            f[u] = v;
            used.set(v);
            if (dfs(pos + 1)) return true;
            used.reset(v);
            f[u] = -1;
            if (nodes > node_limit) return false;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b,
                                                 long long node_limit) {
    if (a.n != b.n || a.m != b.m || a.loop_count() != b.loop_count()) return std::nullopt;
    auto colors = refine(a, b);
    if (!colors) return std::nullopt;
    Searcher s(a, b, colors->first, colors->second, node_limit);
    if (!s.dfs(0)) return std::nullopt;
    return s.f;
}

bool check_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& f) {
    if (a.n != b.n || int(f.size()) != a.n) return false;
    std::vector<uint8_t> hit(b.n, 0);
    for (int v = 0; v < a.n; ++v) {
        if (f[v] < 0 || f[v] >= b.n || hit[f[v]]) return false;
        hit[f[v]] = 1;
        if (a.loop[v] != b.loop[f[v]]) return false;
    }
    for (int u = 0; u < a.n; ++u) {
        if (a.nbr[u].size() != b.nbr[f[u]].size()) return false;
        for (int v : a.nbr[u])
            if (!b.has_edge(f[u], f[v])) return false;
    }
    return true;
}

} // namespace caylab
