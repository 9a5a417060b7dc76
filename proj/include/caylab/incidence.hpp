#pragma once

#include <array>
#include <string>
#include <vector>

#include "caylab/graph.hpp"
#include "caylab/group.hpp"

namespace caylab {

// arithmetic tables for GF(q), q in {2,3,4,5,7,8,9}
struct GaloisField {
    int q = 0, p = 0, deg = 1;
    std::vector<std::vector<int>> add_table, mul_table;

    int add(int a, int b) const { return add_table[a][b]; }
    int mul(int a, int b) const { return mul_table[a][b]; }
    int neg(int a) const;
    int inverse(int a) const; // a != 0

    static GaloisField make(int q);
};

// points of PG(2,q) as homogeneous triples, first nonzero coordinate 1,
// in lexicographic order
struct ProjectivePlane {
    GaloisField field;
    std::vector<std::array<int, 3>> points;

    int dot(int x, int y) const;
};

ProjectivePlane projective_plane(int q);

// orthogonality graph of the plane: x ~ y iff x.y = 0; the q+1 self-conjugate
// points carry loops, every row sums to q+1
Graph polarity_graph(int q);

// bipartite double cover of the polarity graph = point/line incidence, girth 6
Graph levi_graph(int q);

struct DihedrantLevi {
    std::vector<int> difference_set; // lex-min perfect difference set with 0, 1
    Graph graph;                     // dihedral Cayley graph over the reflections a^d b
};

DihedrantLevi dihedrant_levi(int q); // q in {2,3,4,5,7,8}

struct LpsGraph {
    int p = 0, q = 0;
    FiniteGroup group; // PGL(2,q) on normalized matrices
    Graph graph;
    bool bipartite = false;                  // Legendre(p|q) = -1
    std::vector<std::array<int, 4>> quads;   // the p+1 integer quadruples
};

// the Ramanujan family: Cayley graph of PGL(2,q) over the p+1 quadruple
// matrices; (p+1)-regular on q^3 - q vertices
LpsGraph lps_graph(int p, int q);

// the graph itself when bipartite, its double cover otherwise
Graph y_graph(const LpsGraph& x);

} // namespace caylab
