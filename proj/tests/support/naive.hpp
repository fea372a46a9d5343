#pragma once

// Brute-force references used as independent oracles in the tests. Nothing
// here calls the library's path walks or its verifier.

#include <cstdint>
#include <vector>

#include "aec/coloring.hpp"
#include "aec/graph.hpp"
#include "aec/rng.hpp"

namespace aec::testing {

/// No two colored edges sharing an endpoint carry the same color.
bool naive_proper(const Coloring& c);

/// Enumerates simple cycles of colored edges and reports whether one of them
/// uses at most two colors. On a proper coloring the two colors are fixed
/// after two steps, so each search is a single walk per starting pair.
bool naive_has_two_colored_cycle(const Coloring& c);

inline bool naive_acyclic(const Coloring& c) { return naive_proper(c) && !naive_has_two_colored_cycle(c); }

/// A simple path from a to b whose edges alternate alpha and beta, with
/// alpha on the first and last edge, as its vertex sequence. Found by
/// exhaustive search; empty when there is none.
std::vector<VertexId> naive_critical_path(const Coloring& c, Color alpha, Color beta, VertexId a, VertexId b);

/// Random simple graph with maximum degree 4 and up to m edges (fewer when
/// random pairs keep colliding). Not necessarily connected.
Graph random_graph(std::size_t n, std::size_t m, Rng& rng);

/// Colors edges in random order, each with probability `density`, using a
/// random color among those that keep the coloring proper and acyclic.
void random_acyclic_coloring(Coloring& c, Rng& rng, double density = 1.0);

/// Independent check that every edge of g is colored and that adjacent
/// edges differ; used on large outputs where cycle enumeration is too slow.
bool total_and_proper(const Coloring& c);

}  // namespace aec::testing
