#pragma once

#include <vector>

#include "caylab/graph.hpp"
#include "caylab/group.hpp"

namespace caylab {

// eigenvalues of the adjacency matrix, ascending; a loop contributes a
// diagonal 1 (so every row of a polarity graph sums to q + 1)
std::vector<double> spectrum(const Graph& g); // n <= 3000

struct NdlSummary {
    int n = 0;
    bool regular = false;
    int d = 0;              // row-sum degree when regular
    bool bipartite = false;
    double lambda = 0;      // max |eigenvalue| after removing d once (and -d once if bipartite)
};

NdlSummary ndl_summary(const Graph& g);

// the expander-mixing lower bound (d - lambda)/2 on the sensitivity of the
// bipartite double cover
double mixing_sensitivity_bound(const NdlSummary& s);

// ordered edge count e(S,T) = |{(u,v) : u in S, v in T, uv edge}|; a loop at
// a vertex in both sets counts once
long long ordered_edges_between(const Graph& g, const std::vector<int>& s,
                                const std::vector<int>& t);

struct MinimalityDiagnostic {
    double lambda = 0;
    double threshold = 0;    // d - 4
    bool compatible = false; // lambda >= d - 4 is necessary for a minimal connection set
    bool minimal = false;    // dropping any generator (with its inverse) disconnects
    bool consistent = false; // minimal implies compatible
};

// eigenvalue test plus the direct check that every generator is needed for
// connectivity; the two must agree in the minimal => compatible direction
MinimalityDiagnostic minimality_diagnostic(const FiniteGroup& grp, const ConnectionSet& c);

} // namespace caylab
