#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aec/coloring.hpp"

namespace aec {

/// Maximal walk alternating two colors, oriented from vertices.front().
struct BichromaticPath {
    Color alpha = kNoColor;
    Color beta = kNoColor;
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    Color first_color = kNoColor;
    Color last_color = kNoColor;

    VertexId start() const { return vertices.front(); }
    VertexId end() const { return vertices.back(); }
    bool contains(VertexId v) const;
    /// "a,b: v0 -e- v1 -e- ..." as used in traces and diagnostics.
    std::string str() const;
};

/// The alternating (alpha, beta) path that leaves v through its edge colored
/// `start`, followed until it cannot be extended. Returns nullopt if v has no
/// such edge. Throws InvalidPair if alpha == beta or start is not one of them,
/// and OnCycle if the walk comes back to v.
std::optional<BichromaticPath> maximal_path(const Coloring& c, Color alpha, Color beta, VertexId v, Color start);

/// True iff the (alpha, beta) walk leaving a by its alpha edge ends at b with
/// an alpha edge, i.e. an (alpha, beta, ab) critical path.
bool exists_critical_path(const Coloring& c, Color alpha, Color beta, VertexId a, VertexId b);

/// Whether candidate beta of the absent/uncolored edge xy creates no
/// bichromatic cycle, decided through critical paths. Throws NotACandidate.
bool is_valid(const Coloring& c, VertexId x, VertexId y, Color beta);

/// True iff v lies on an (alpha, beta) bichromatic cycle.
bool on_bichromatic_cycle(const Coloring& c, Color alpha, Color beta, VertexId v);

struct CandidateClass {
    enum class Tag { Valid, Weak, Strong };
    Color color = kNoColor;
    Tag tag = Tag::Valid;
    /// Colors alpha in F_x ∩ F_y forming an (alpha, color, xy) critical path.
    std::vector<Color> blockers;
    /// For weak colors: the neighbour of x the critical path leaves through,
    /// i.e. the S-set the color is actively present in.
    VertexId active_at = kNone;
    /// Neighbours a of x with color in S(x,a) but not actively present there.
    std::vector<VertexId> passive_at;
    std::optional<BichromaticPath> path;  // the critical path of a weak color
};

struct ColorClassification {
    VertexId x = kNone;
    VertexId y = kNone;
    std::vector<CandidateClass> classes;  // ascending by color

    const CandidateClass* find(Color k) const;
    bool any(CandidateClass::Tag t) const;
};

/// Tags every candidate of xy (within the six-color working palette) as
/// valid, weak or strong.
ColorClassification classify(const Coloring& c, VertexId x, VertexId y);

/// Number of edges stepped over by path walks on this thread; feeds the
/// bench "nodes" column.
std::uint64_t path_steps();
void reset_path_steps();

}  // namespace aec
