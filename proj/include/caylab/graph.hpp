#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "caylab/util.hpp"

namespace caylab {

constexpr int kMaxVertices = 65536;

// Dynamic fixed-width bitset.  Row type for adjacency matrices and the
// working sets inside the branch-and-bound solver.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const;
    int count_and(const Bitset& o) const; // |this & o|
    bool intersects(const Bitset& o) const;
    void operator&=(const Bitset& o);
    void operator|=(const Bitset& o);
    void and_not(const Bitset& o); // this &= ~o
    int first_set() const;         // -1 if empty
    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    // visits set bits in increasing order
    template <class F> void for_each(F&& f) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t x = w_[wi];
            while (x) {
                f(int(wi * 64 + __builtin_ctzll(x)));
                x &= x - 1;
            }
        }
    }

    const std::vector<uint64_t>& words() const { return w_; }

  private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// Undirected graph on vertices 0..n-1.  Loops are kept out of the adjacency
// rows and tracked per vertex; a loop adds 2 to the degree of its vertex.
// `m` counts non-loop edges only.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<Bitset> adj;
    std::vector<std::vector<int>> nbr;
    std::vector<uint8_t> loop;
    std::string name;
    // Set only by constructions that guarantee it (Cayley graphs, hypercubes,
    // cycles, Cartesian products and double covers of such).  The solver uses
    // it to anchor the root branch.
    bool vertex_transitive = false;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            const std::vector<int>& loops = {}, std::string name = "");

    bool has_edge(int u, int v) const { return adj[u].test(v); }
    int degree(int v) const { return int(nbr[v].size()) + 2 * loop[v]; }
    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
        return d;
    }
    long long loop_count() const;
    bool is_regular(int* deg_out = nullptr) const;

    // max degree of the subgraph induced by `s`; a loop contributes 2
    int induced_max_degree(const std::vector<int>& s) const;
    int induced_max_degree(const Bitset& s) const;

    bool connected() const;
    // deterministic proper 2-coloring (component roots in index order get
    // color 0), or nullopt if some component is odd.  Loops are odd cycles.
    std::optional<std::vector<int8_t>> bipartition() const;
    // length of a shortest cycle, -1 if acyclic; loops excluded
    int girth() const;

    std::string canonical_serialize() const;
    std::string fingerprint() const; // sha256 of canonical_serialize()
    static Graph parse(const std::string& text);
    std::string to_dot() const;
};

Graph kronecker_double_cover(const Graph& g); // vertex (v,c) -> v + c*n
Graph cartesian_product(const Graph& g, const Graph& h); // (u,u') -> u*h.n + u'
// f maps cover vertices onto base vertices; checks that f restricted to each
// closed neighborhood is a bijection onto the closed neighborhood downstairs
// (a loop at f(x) must be hit by exactly one cover neighbor of x).
bool is_covering_map(const Graph& cover, const Graph& base, const std::vector<int>& f);

} // namespace caylab
