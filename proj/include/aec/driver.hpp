#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "aec/coloring.hpp"
#include "aec/extender.hpp"
#include "aec/trace.hpp"

namespace aec {

struct DriverOptions {
    bool debug = false;       // verify after every extension step and merge
    Trace* trace = nullptr;   // filled when non-null
    /// 0 colors pendant edges with their smallest candidate; any other value
    /// seeds a random choice among the candidates, which drives the
    /// extension through its recoloring branches far more often.
    std::uint64_t pendant_seed = 0;
};

struct DriverStats {
    std::size_t extensions = 0;
    std::size_t moves = 0;
    std::size_t reentries = 0;
    std::array<std::size_t, 4> cases{};  // indexed by CaseId
    std::uint64_t path_steps = 0;
};

/// Six colors for a connected graph with maximum degree 4 and m <= 2n - 1.
/// Throws PreconditionViolated otherwise. The result refers to g.
Coloring color_connected_6(const Graph& g, const DriverOptions& opts = {}, DriverStats* stats = nullptr);

/// Seven colors for any graph with maximum degree 4: each component with
/// m = 2n loses one edge, is colored with six colors, and the edge gets 7.
Coloring color_graph_7(const Graph& g, const DriverOptions& opts = {}, DriverStats* stats = nullptr);

struct MergeResult {
    std::vector<Color> colors;  // by edge id of g
    /// perms[b][q]: color q of block b is shown as perms[b][q].
    std::vector<std::array<Color, kBasePalette + 1>> perms;
};

/// Joins independently colored blocks (edge-disjoint, forming a block forest)
/// by relabeling each block so that its colors at the shared cut vertex avoid
/// those already there. block_colors[b][i] is the color of blocks[b][i].
MergeResult merge_blocks(const Graph& g, const std::vector<std::vector<EdgeId>>& blocks,
                         const std::vector<std::vector<Color>>& block_colors);

}  // namespace aec
