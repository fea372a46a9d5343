#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "aec/coloring.hpp"
#include "aec/moves.hpp"

namespace aec {

enum class CaseId { One, TwoOne, TwoTwo, Three };
std::string_view to_string(CaseId id);

/// Roles around the uncolored edge xy in a padded graph, plus the color
/// relabeling that puts the instance into canonical form.
///
/// Canonical labels 1..6 name colors by role: in case 2, 1 and 2 are the
/// colors of xa and xb and 3 the remaining color at y; in case 3, 1 is the
/// color shared by x and y (on xa and ya'), 2 is on xb, 3 and 4 on yb' and
/// yd'. The remaining labels are the candidates of xy, ordered per case.
struct ExtensionContext {
    VertexId x = kNone, y = kNone;
    VertexId a = kNone, b = kNone;                       // neighbours of x
    VertexId a_y = kNone, b_y = kNone, d_y = kNone;      // neighbours of y (a', b', d')
    std::array<VertexId, 3> k{kNone, kNone, kNone};      // neighbours of a other than x
    std::array<VertexId, 3> l{kNone, kNone, kNone};      // neighbours of b other than x
    std::array<Color, 7> color_of_label{};               // [label] -> live color, [0] unused
    std::array<int, kMaxPalette + 1> label_of_color{};   // [live color] -> label
    CaseId case_id = CaseId::One;

    Color color(int label) const { return color_of_label[label]; }
    int label(Color c) const { return label_of_color[c]; }
    void swap_labels(int p, int q);
};

/// Requires deg(x) = 2, deg(y) = 3, xy absent, all edges at x and y colored
/// and every neighbour of x or y of degree 4; throws PreconditionViolated.
ExtensionContext normalize(const Coloring& c, VertexId x, VertexId y);

struct ExtendOptions {
    /// Re-verify acyclicity after every step and check that every exchange
    /// destroys the critical paths through its pivot.
    bool debug = false;
    int move_budget = 50;
};

struct ExtensionOutcome {
    Color color = kNoColor;
    std::vector<Move> moves;
    std::vector<std::string> steps;  // step tags in the order they ran
    CaseId initial_case = CaseId::One;
    bool reentered = false;          // case 3 handed over to case 2
};

/// Modifies c so that some candidate of xy becomes valid and returns it; the
/// caller assigns it. Throws InternalError (tagged with the failing step) if
/// a step's postcondition does not hold.
ExtensionOutcome extend(Coloring& c, VertexId x, VertexId y, const ExtendOptions& opts = {});

}  // namespace aec
