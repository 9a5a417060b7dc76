#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caylab/certificate.hpp"
#include "caylab/graph.hpp"
#include "caylab/group.hpp"

namespace caylab {

// rightmost nonzero base-3 digit of m >= 1; always 1 or 2
int base3_rightmost(long long m);

// exact count of fixed-point-free permutations, via the two-term recurrence
long long derangement_count(int n); // n in [1, 20]

struct SubsetWitness {
    Graph graph;
    Certificate cert;
};

// Cay(D_{3^d}, {a^{3^i} b : 0 <= i <= d}) together with the (3^d + 1)-vertex
// set inducing a perfect matching
SubsetWitness dihedrant_matching(int d); // d in [0, 9]

// Cay(S_n, {(1 2), ..., (1 n)}) and the matching-inducing half-plus-one set
// selected by support size and parity
SubsetWitness star_graph_subset(int n); // n in [2, 8]

// the (m+1)-regular Cayley graph of S_{2m+1} (m odd) or A_{2m+1} (m even)
// whose set {p : p(1) > m} induces a perfect matching on d*n/(2d-1) vertices
SubsetWitness tight_matching(int m); // m in [1, 3]

// ---------------------------------------------------------------------------

struct ArcFamily {
    std::vector<Bitset> sets; // subsets of the ambient ground set

    int r() const; // max member size
    int t() const; // largest subfamily in which every member keeps a private element
};

// A finite lattice presented as a family of subsets of {0..ground-1} ordered
// by inclusion, whose cover pairs differ in exactly one ambient element.
// Member order is preserved: vertex i of the cover graph is members[i].
struct LatticeModel {
    int ground = 0;
    std::vector<Bitset> members;
    std::vector<std::pair<int, int>> covers; // (lower, upper) member indices

    static LatticeModel boolean_lattice(int n); // members = masks 0..2^n-1

    // lattice with insertion-order vertices; computes covers, validates that
    // the extremes are empty/full and (for <= 5000 members) joins exist
    static LatticeModel from_members(int ground, std::vector<Bitset> members);

    Graph cover_graph() const;
    int find(const Bitset& s) const;   // member index, -1 if absent
    int join(int a, int b) const;      // least member containing both; -1 if none
};

struct LatticeSubsetReport {
    Certificate cert;  // low-degree-set over the cover graph
    int k = 0;         // max{r(F), t(F)}
    int r = 0;
    int t = 0;
    long long x_size = 0;     // |X(F)| before taking the larger side
    long long imbalance = 0;  // |chosen| - |complement|
    // alternating-sign expansion over the joins of all nonempty subfamilies;
    // only set when the cover graph is regular
    std::optional<long long> ie_estimate;
};

// X(F) = even(up-set of F) ∪ odd(rest); returns the larger of X and its
// complement, which both induce degree <= max{r(F), t(F)} in the cover graph
LatticeSubsetReport lattice_subset(const LatticeModel& model, const ArcFamily& fam);

// the hypercube specialization: consecutive blocks of size ceil(sqrt(d))
SubsetWitness cfgs_subset(int d); // d in [1, 14]
ArcFamily cfgs_family(int d);

// degree <= 2 subset of C_i x C_j on more than half the vertices
SubsetWitness torus_subset(int i, int j); // even, >= 4

struct Z3rWitness {
    Graph graph;
    Certificate cert;        // 3^{r-1} + 1 vertices at degree <= 1
    Certificate independent; // disjoint maximum independent set, 3^{r-1} vertices
};

// Cay(Z_3^r, {±e_1, ..., ±e_r}) with the inductive degree-1 set and its
// complementary maximum independent set
Z3rWitness z3r_subset(int r); // r in [1, 9]

} // namespace caylab
