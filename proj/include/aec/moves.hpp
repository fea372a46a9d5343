#pragma once

#include <string>
#include <vector>

#include "aec/coloring.hpp"

namespace aec {

/// One mutation of a coloring, with what is needed to undo it.
struct Move {
    enum class Kind { Assign, Recolor, Exchange };
    Kind kind = Kind::Assign;
    EdgeId edge = kNone;         // Assign, Recolor
    Color old_color = kNoColor;  // Recolor
    Color new_color = kNoColor;  // Assign, Recolor
    VertexId u = kNone, i = kNone, j = kNone;  // Exchange: swap colors of ui and uj
    EdgeId edge_i = kNone, edge_j = kNone;
    Color color_i = kNoColor, color_j = kNoColor;  // colors of ui, uj before the swap
    std::string tag;

    bool operator==(const Move&) const = default;
};

/// (u, i, j, N', N''): swapping the colors of ui and uj is proper, and the
/// only bichromatic cycles it can create pass through a vertex of N''.
struct ConfigurationA {
    VertexId u = kNone;
    VertexId i = kNone;
    VertexId j = kNone;
    std::vector<VertexId> safe;   // N'
    std::vector<VertexId> check;  // N''
};

Move recolor(Coloring& c, EdgeId e, Color gamma, std::string tag = {});
bool is_configuration_A(const Coloring& c, const ConfigurationA& cfg);

/// Swaps c(u,i) and c(u,j). Throws NotConfigurationA, or CycleCreated (after
/// rolling back) when a cycle through some h in N'' appears.
Move color_exchange(Coloring& c, const ConfigurationA& cfg, std::string tag = {});

/// Re-applies a recorded move after checking it matches the current state.
void apply(Coloring& c, const Move& m);
void undo(Coloring& c, const Move& m);

/// Assertion helper for exchanges: given an (alpha, beta, ab) critical path
/// through u before swapping ui/uj, reports whether it is gone afterwards.
/// Throws PreconditionViolated if the hypotheses do not hold in `before`.
bool breaks_critical_path_check(const Coloring& before, const Coloring& after, Color alpha, Color beta, VertexId a,
                                VertexId b, VertexId u, VertexId i, VertexId j);

}  // namespace aec
