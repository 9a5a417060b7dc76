#pragma once

#include "caylab/graph.hpp"

namespace caylab {

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph hypercube(int d); // vertices are the binary words 0..2^d-1
// outer n-cycle u_0..u_{n-1}, inner star polygon v_i ~ v_{i+k}, spokes u_i ~ v_i;
// inner vertices are n..2n-1.  G(8,3) is the Mobius-Kantor graph, G(10,3) Desargues.
Graph generalized_petersen(int n, int k);

} // namespace caylab
