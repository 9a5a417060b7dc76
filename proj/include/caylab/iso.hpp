#pragma once

#include <optional>
#include <vector>

#include "caylab/graph.hpp"

namespace caylab {

// Backtracking isomorphism search with color refinement, for the small named
// graphs this project compares (tens to a couple hundred vertices).  Returns
// a vertex bijection f with a~b iff f(a)~f(b), or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b,
                                                 long long node_limit = 50'000'000);

bool check_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& f);

} // namespace caylab
