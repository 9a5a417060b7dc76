#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caylab/certificate.hpp"
#include "caylab/constructions.hpp"
#include "caylab/graph.hpp"
#include "caylab/group.hpp"

namespace caylab {

// Finite reflection group with a fixed simple system.  Elements live in a
// concrete permutation group; descriptors follow the classification ("A3",
// "B4", "D5", "I7" = the dihedral of the 7-gon, "H3", "H4", "F4", "E6",
// products such as "A3xI5").  The root set is realized numerically from the
// bilinear form and frozen into exact permutations.
struct CoxeterSystem {
    std::string type_name;
    int rank = 0;
    std::vector<std::vector<int>> matrix;   // m_ii = 1, off-diagonal >= 2
    FiniteGroup group;
    std::vector<int> gens;                  // element index per generator
    std::vector<int> lengths;               // word length per element
    std::vector<int> reflections;           // sorted element indices
    std::vector<std::vector<double>> roots; // realized root vectors
    std::vector<std::vector<int>> generator_perms; // action on roots

    int order() const { return group.order(); }
    int length(int w) const { return lengths[w]; }
    int longest_element() const;
};

CoxeterSystem coxeter_system(const std::string& descriptor);

// Cayley graph over the simple generators: |S|-regular, bipartite by length
Graph coxeter_cayley(const CoxeterSystem& sys);

// largest d with a d-cube subgraph, read off the diagram: maximum independent
// set of the edges {i,j : m_ij >= 3}
int kappa_formula(const CoxeterSystem& sys);

// reflections t with l(t w) < l(w); |result| = l(w), inclusion = weak order
std::vector<int> inversion_set(const CoxeterSystem& sys, int w);

// the weak order as a lattice of inversion sets over the reflection ground set
LatticeModel weak_order_lattice(const CoxeterSystem& sys);

struct ParabolicQuotient {
    std::vector<int> J;           // generator indices
    std::vector<int> reps;        // minimal coset representatives, sorted
    Graph quotient_graph;         // on rep positions
    std::vector<int> layer_sizes; // reps per length
};

ParabolicQuotient parabolic_quotient(const CoxeterSystem& sys, const std::vector<int>& J);

// imbalance of the natural bipartition: |even layers - odd layers| when the
// quotient graph is connected, exact solver otherwise
long long iota0_quotient(const ParabolicQuotient& q);

struct CubeLikeResult {
    bool cube_like = false;
    std::vector<int> witness;       // J on success
    std::vector<std::string> log;   // per-candidate refutations otherwise
};

// searches the maximal independent sets of the diagram for a commuting J with
// an imbalanced quotient; candidates are filtered by the two necessary
// conditions (cube dimension matches, reflections minus |J| even)
CubeLikeResult is_cube_like(const CoxeterSystem& sys);

// the half-plus-imbalance set: blocks A x A' and B x B' of the coset
// decomposition w = j * u over the cube partition of W_J and the parity
// partition of the quotient
Certificate cube_like_subset(const CoxeterSystem& sys, const std::vector<int>& J);

// signed-permutation construction: the symmetric-group set K inside the
// flip-free copy plus the nonempty parity-mismatch class
Certificate bn_dn_subset(char family, int n); // 'B' 3..5, 'D' 4..5

} // namespace caylab
