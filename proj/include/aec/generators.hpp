#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aec/graph.hpp"

namespace aec {

/// A family name with integer parameters, written "family(p1,p2,...)".
///
///   cycle(n)  complete(n)  complete_minus_edge(n)  circulant(n,o1,o2,...)
///   random_valid(n,m[,seed])  random_4regular(n[,seed])  subcubic_random(n,m[,seed])
///
/// A random family without an explicit seed uses `seed`.
struct GeneratorSpec {
    std::string family;
    std::vector<std::uint64_t> params;
    std::uint64_t seed = 1;

    /// Throws InfeasibleSpec on malformed text.
    static GeneratorSpec parse(std::string_view text, std::uint64_t default_seed = 1);
    std::string str() const;
};

Graph generate(const GeneratorSpec& spec);

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// K_n without its last edge (n-2, n-1).
Graph complete_minus_edge(std::size_t n);
Graph circulant(std::size_t n, const std::vector<std::size_t>& offsets);
/// Connected, maximum degree 4, exactly m edges with n-1 <= m <= 2n-1.
Graph random_valid(std::size_t n, std::size_t m, std::uint64_t seed);
/// Connected 4-regular graph on n >= 5 vertices.
Graph random_4regular(std::size_t n, std::uint64_t seed);
/// Maximum degree 3 with m edges; connected whenever m >= n-1.
Graph subcubic_random(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace aec
