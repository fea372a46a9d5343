#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "aec/coloring.hpp"
#include "aec/moves.hpp"

namespace aec {

/// One line of a coloring trace.
///
/// Blocks are colored one at a time, each in its own segment opened by a
/// BLOCK line; inside a segment, moves only see the block's edges plus the
/// pendant edges currently padded in. PERMUTE relabels a finished block and
/// MERGE joins all blocks into one coloring; later moves are global.
///
///   palette 6
///   BLOCK k e1 e2 ...
///   PAD e u v            pendant edge e from u to the fresh vertex v
///   ASSIGN e color # tag
///   RECOLOR e old new # tag
///   EXCHANGE u i j # tag
///   UNPAD e
///   PERMUTE k p1 .. p6   color q of block k becomes p_q
///   MERGE
///
/// Pendant vertex and edge ids continue after the graph's own ids and are
/// never reused within a trace.
struct TraceRecord {
    enum class Kind { Block, Pad, Unpad, Assign, Recolor, Exchange, Permute, Merge };
    Kind kind = Kind::Assign;
    std::size_t block = 0;               // Block, Permute
    std::vector<EdgeId> edges;           // Block
    EdgeId edge = kNone;                 // Pad, Unpad, Assign, Recolor
    VertexId u = kNone, v = kNone;       // Pad: u -- v;  Exchange: pivot u
    VertexId i = kNone, j = kNone;       // Exchange
    Color old_color = kNoColor;          // Recolor
    Color color = kNoColor;              // Assign, Recolor
    std::array<Color, kBasePalette + 1> perm{};  // Permute, [q] -> p_q
    std::string tag;

    bool operator==(const TraceRecord&) const = default;
};

struct Trace {
    int palette = kBasePalette;
    std::vector<TraceRecord> records;

    void write(std::ostream& os) const;
    /// Throws Parse with the offending line number.
    static Trace read(std::istream& is);
    bool operator==(const Trace&) const = default;
};

struct ReplayReport {
    bool ok = false;
    std::string message;
    std::vector<Color> colors;  // final color by edge id of the input graph
};

/// Re-applies a trace to g from the empty coloring, checking every move for
/// properness, every finished block for acyclicity and the final coloring
/// with the verifier.
ReplayReport replay(const Graph& g, const Trace& trace);

}  // namespace aec
