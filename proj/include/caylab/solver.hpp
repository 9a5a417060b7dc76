#pragma once

#include <optional>
#include <string>

#include "caylab/certificate.hpp"
#include "caylab/graph.hpp"
#include "caylab/util.hpp"

namespace caylab {

struct Budget {
    long long max_nodes = 0; // 0 = unlimited
    double max_seconds = 0;  // 0 = unlimited
    static Budget parse(const std::string& s); // "600s", "1e7nodes", "none"
};

enum class SolveStatus {
    Exact,    // value is the answer
    Lower,    // value is achieved but the search stopped at a requested target
    Upper,    // value is only an upper bound
    Interval, // the answer lies in [value, value_hi]
};

std::string to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::Exact;
    long long value = 0;
    long long value_hi = 0; // == value unless status == Interval
    bool feasible = true;   // iota: false when no partition satisfies the bound
    long long nodes = 0;
    double seconds = 0;
    std::optional<Certificate> witness;
};

// largest S with max degree of G[S] <= k (branch and bound; exact unless the
// budget runs out).  `target`: stop as soon as a set of that size is found.
SolveResult max_low_degree_set(const Graph& g, int k, const Budget& budget = {},
                               long long target = -1);

SolveResult independence_number(const Graph& g, const Budget& budget = {});

// least k such that some S with |S| > alpha(G) induces max degree <= k.
// alpha_hint is validated: structurally for connected regular bipartite
// graphs (n/2), by recomputation otherwise.
SolveResult sensitivity(const Graph& g, std::optional<long long> alpha_hint = {},
                        const Budget& budget = {});

// least k such that some S with |S| >= beta*n induces max degree <= k
SolveResult delta_beta(const Graph& g, const Rational& beta, const Budget& budget = {});

// max |A| - |B| over partitions V = A ⊎ B with both sides inducing max
// degree <= k; result.feasible = false when no such partition exists
SolveResult iota(const Graph& g, int k, const Budget& budget = {});

// largest d <= d_max such that G contains a d-cube subgraph; witness lists
// the image of each binary word
SolveResult kappa_search(const Graph& g, int d_max = 6, const Budget& budget = {});

} // namespace caylab
