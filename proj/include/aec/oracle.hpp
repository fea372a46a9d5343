#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aec/coloring.hpp"

namespace aec {

inline constexpr std::size_t kOracleMaxEdges = 24;

struct OracleResult {
    bool feasible = false;        // some k <= k_max works
    int exact_index = 0;          // smallest such k
    std::vector<Color> witness;   // by edge id
    std::uint64_t nodes = 0;      // color assignments tried, over all k
};

/// An acyclic coloring with colors 1..k, or nullopt once the search space is
/// exhausted. Throws TooLarge when g has more than max_edges edges.
std::optional<std::vector<Color>> is_k_feasible(const Graph& g, int k, std::uint64_t* nodes = nullptr,
                                                std::size_t max_edges = kOracleMaxEdges);

/// Tries k = max degree, max degree + 1, ... up to k_max (at most 7).
OracleResult exact_index(const Graph& g, int k_max = kMaxPalette, std::size_t max_edges = kOracleMaxEdges);

}  // namespace aec
