#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "aec/blocks.hpp"
#include "aec/coloring.hpp"
#include "aec/graph.hpp"

namespace aec::testing {

/// A padded graph with an absent edge xy and an acyclic coloring of the
/// rest, tuned by local search to push the extension deep into its cases.
struct ExtensionInstance {
    Graph g;
    std::unique_ptr<Coloring> c;
    VertexId x = kNone;
    VertexId y = kNone;
};

/// Starts from a random 4-regular graph minus one edge at a vertex x,
/// removes xy, pads and colors randomly; then recolors edges away from x and
/// y for up to `climb` steps, keeping changes that make the extension run
/// longer. Returns nullptr when the random coloring gets stuck.
std::unique_ptr<ExtensionInstance> adversarial_instance(std::uint64_t seed, int climb);

}  // namespace aec::testing
