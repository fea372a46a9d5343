#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aec/graph.hpp"

namespace aec {

/// 0 means "uncolored"; real colors are 1..7.
using Color = std::uint8_t;
inline constexpr Color kNoColor = 0;
inline constexpr int kMaxPalette = 7;
/// Working palette of the six-color extension.
inline constexpr int kBasePalette = 6;

/// Small set of colors 1..7 as a bitmask.
class ColorSet {
public:
    constexpr ColorSet() = default;
    constexpr ColorSet(std::initializer_list<Color> colors) {
        for (Color c : colors) insert(c);
    }
    static constexpr ColorSet palette(int k) { return ColorSet(static_cast<std::uint8_t>(((1u << k) - 1u) << 1)); }

    constexpr bool contains(Color c) const { return c != kNoColor && (bits_ >> c) & 1u; }
    constexpr void insert(Color c) { bits_ |= static_cast<std::uint8_t>(1u << c); }
    constexpr void erase(Color c) { bits_ &= static_cast<std::uint8_t>(~(1u << c)); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    /// Smallest member, or kNoColor.
    constexpr Color first() const { return bits_ == 0 ? kNoColor : static_cast<Color>(std::countr_zero(bits_)); }

    constexpr ColorSet operator|(ColorSet o) const { return ColorSet(bits_ | o.bits_); }
    constexpr ColorSet operator&(ColorSet o) const { return ColorSet(bits_ & o.bits_); }
    constexpr ColorSet operator-(ColorSet o) const { return ColorSet(bits_ & ~o.bits_); }
    constexpr ColorSet without(Color c) const {
        ColorSet s = *this;
        s.erase(c);
        return s;
    }
    constexpr bool operator==(const ColorSet&) const = default;

    std::vector<Color> to_vector() const;
    std::string str() const;

private:
    constexpr explicit ColorSet(unsigned bits) : bits_(static_cast<std::uint8_t>(bits)) {}
    std::uint8_t bits_ = 0;
};

/// Partial edge coloring over a fixed palette {1..k}, k in {6, 7}.
///
/// The coloring refers to a graph it does not own; edges created after the
/// coloring (padding) start uncolored. assign() enforces properness against
/// colored neighbours but never checks acyclicity.
class Coloring {
public:
    Coloring(const Graph& g, int palette);

    const Graph& graph() const { return *graph_; }
    int palette() const { return palette_; }

    Color color(EdgeId e) const { return e < colors_.size() ? colors_[e] : kNoColor; }
    /// Color of the live edge uv; throws UnknownEdge if absent.
    Color color(VertexId u, VertexId v) const;
    bool is_colored(EdgeId e) const { return color(e) != kNoColor; }

    /// F(u): colors on colored edges at u.
    ColorSet at(VertexId u) const;
    /// S(a,b) = F(b) minus c(ab); ab must be colored.
    ColorSet s_set(VertexId a, VertexId b) const;
    /// Palette minus colors at both endpoints (the edge itself excluded).
    ColorSet candidates(EdgeId e) const;
    ColorSet candidates(VertexId u, VertexId v) const;

    /// Colored edge at u carrying color k, or kNone.
    EdgeId edge_with_color(VertexId u, Color k) const;

    void assign(EdgeId e, Color k);
    void unassign(EdgeId e);
    /// Writes without any check; used by moves that validate themselves.
    void set_raw(EdgeId e, Color k);

    ColorSet used_colors() const;
    std::size_t colored_count() const;
    /// Every live edge of the graph is colored.
    bool is_total() const;

    const std::vector<Color>& raw() const { return colors_; }
    bool operator==(const Coloring& o) const;

private:
    const Graph* graph_;
    int palette_;
    std::vector<Color> colors_;
};

struct BichromaticCycle {
    Color alpha = kNoColor;
    Color beta = kNoColor;
    std::vector<VertexId> vertices;  // closed walk, first vertex not repeated
    std::vector<EdgeId> edges;
};

/// An (alpha, beta)-alternating cycle among the colored edges, if any.
/// Throws InvalidPair when alpha == beta.
std::optional<BichromaticCycle> find_bichromatic_cycle(const Coloring& c, Color alpha, Color beta);

struct Verdict {
    enum class Kind { Ok, OutOfPalette, Improper, Cycle };
    Kind kind = Kind::Ok;
    std::vector<EdgeId> edges;          // offending edge pair or the cycle's edges
    std::vector<VertexId> cycle;        // cycle vertices when kind == Cycle
    Color alpha = kNoColor, beta = kNoColor;

    bool ok() const { return kind == Kind::Ok; }
    std::string describe(const Graph& g) const;
};

/// Proper on colored edges and free of bichromatic cycles. Color pairs are
/// checked in parallel; the reported cycle is the one for the smallest pair.
Verdict verify_acyclic(const Coloring& c);
/// Single-threaded reference for verify_acyclic.
Verdict verify_acyclic_serial(const Coloring& c);

}  // namespace aec
