#pragma once

#include <vector>

#include "aec/graph.hpp"

namespace aec::testing {

/// Every connected graph on exactly n vertices (n <= 6) with maximum degree
/// at most 4 and m <= 2n - 1, one per isomorphism class. Classes are told
/// apart by the lexicographically least adjacency bitmask over all vertex
/// permutations.
std::vector<Graph> connected_graphs(std::size_t n);

}  // namespace aec::testing
