#include "aec/trace.hpp"

#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "aec/error.hpp"

namespace aec {

void Trace::write(std::ostream& os) const {
    os << "palette " << palette << '\n';
    for (const auto& r : records) {
        switch (r.kind) {
            case TraceRecord::Kind::Block:
                os << "BLOCK " << r.block;
                for (EdgeId e : r.edges) os << ' ' << e;
                break;
            case TraceRecord::Kind::Pad: os << "PAD " << r.edge << ' ' << r.u << ' ' << r.v; break;
            case TraceRecord::Kind::Unpad: os << "UNPAD " << r.edge; break;
            case TraceRecord::Kind::Assign: os << "ASSIGN " << r.edge << ' ' << int(r.color); break;
            case TraceRecord::Kind::Recolor:
                os << "RECOLOR " << r.edge << ' ' << int(r.old_color) << ' ' << int(r.color);
                break;
            case TraceRecord::Kind::Exchange: os << "EXCHANGE " << r.u << ' ' << r.i << ' ' << r.j; break;
            case TraceRecord::Kind::Permute:
                os << "PERMUTE " << r.block;
                for (int q = 1; q <= kBasePalette; ++q) os << ' ' << int(r.perm[q]);
                break;
            case TraceRecord::Kind::Merge: os << "MERGE"; break;
        }
        if (!r.tag.empty()) os << " # " << r.tag;
        os << '\n';
    }
}

Trace Trace::read(std::istream& is) {
    Trace t;
    std::string line;
    std::size_t lineno = 0;
    bool seen_palette = false;
    while (std::getline(is, line)) {
        ++lineno;
        auto bad = [&](const std::string& why) {
            throw Error(ErrorKind::Parse, "trace line " + std::to_string(lineno) + ": " + why);
        };
        std::string tag;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            tag = line.substr(hash + 1);
            line.erase(hash);
            auto b = tag.find_first_not_of(" \t");
            tag = b == std::string::npos ? std::string() : tag.substr(b);
            while (!tag.empty() && (tag.back() == ' ' || tag.back() == '\r')) tag.pop_back();
        }
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;

        auto num = [&]() -> std::uint64_t {
            std::string s;
            if (!(ls >> s)) bad("missing field");
            std::size_t used = 0;
            std::uint64_t v = 0;
            try {
                v = std::stoull(s, &used);
            } catch (const std::exception&) {
                bad("not a number: " + s);
            }
            if (used != s.size() || s[0] == '-') bad("not a number: " + s);
            return v;
        };
        auto color = [&]() -> Color {
            auto v = num();
            if (v < 1 || v > kMaxPalette) bad("color out of range");
            return static_cast<Color>(v);
        };
        auto id = [&]() -> std::uint32_t {
            auto v = num();
            if (v >= kNone) bad("id out of range");
            return static_cast<std::uint32_t>(v);
        };

        if (word == "palette") {
            auto p = num();
            if (p != 6 && p != 7) bad("palette must be 6 or 7");
            t.palette = static_cast<int>(p);
            seen_palette = true;
            continue;
        }
        TraceRecord r;
        r.tag = tag;
        if (word == "BLOCK") {
            r.kind = TraceRecord::Kind::Block;
            r.block = num();
            std::string s;
            while (ls >> s) {
                std::istringstream one(s);
                std::uint64_t e = 0;
                if (!(one >> e) || e >= kNone) bad("bad edge id " + s);
                r.edges.push_back(static_cast<EdgeId>(e));
            }
        } else if (word == "PAD") {
            r.kind = TraceRecord::Kind::Pad;
            r.edge = id();
            r.u = id();
            r.v = id();
        } else if (word == "UNPAD") {
            r.kind = TraceRecord::Kind::Unpad;
            r.edge = id();
        } else if (word == "ASSIGN") {
            r.kind = TraceRecord::Kind::Assign;
            r.edge = id();
            r.color = color();
        } else if (word == "RECOLOR") {
            r.kind = TraceRecord::Kind::Recolor;
            r.edge = id();
            r.old_color = color();
            r.color = color();
        } else if (word == "EXCHANGE") {
            r.kind = TraceRecord::Kind::Exchange;
            r.u = id();
            r.i = id();
            r.j = id();
        } else if (word == "PERMUTE") {
            r.kind = TraceRecord::Kind::Permute;
            r.block = num();
            for (int q = 1; q <= kBasePalette; ++q) {
                auto p = num();
                if (p < 1 || p > kBasePalette) bad("permutation entry out of range");
                r.perm[q] = static_cast<Color>(p);
            }
        } else if (word == "MERGE") {
            r.kind = TraceRecord::Kind::Merge;
        } else {
            bad("unknown record " + word);
        }
        std::string extra;
        if (r.kind != TraceRecord::Kind::Block && (ls >> extra)) bad("trailing field " + extra);
        t.records.push_back(std::move(r));
    }
    if (!seen_palette) throw Error(ErrorKind::Parse, "trace has no palette line");
    return t;
}

namespace {

// The block currently being replayed, in local ids. Block edges join the
// local graph when they are first assigned, as they do while coloring.
struct Segment {
    std::size_t block = 0;
    Graph graph;
    std::unordered_map<VertexId, VertexId> vertex;  // global -> local
    std::unordered_map<EdgeId, EdgeId> edge;
    std::unordered_set<EdgeId> pending;
    std::vector<std::pair<EdgeId, EdgeId>> added;   // (global, local) block edges
    std::unordered_map<EdgeId, EdgeId> active_pads;
    std::optional<Coloring> coloring;
};

struct ReplayFailure {
    std::string message;
};

Move recolor_move(EdgeId e, Color from, Color to) {
    Move m;
    m.kind = Move::Kind::Recolor;
    m.edge = e;
    m.old_color = from;
    m.new_color = to;
    return m;
}

}  // namespace

ReplayReport replay(const Graph& g, const Trace& trace) {
    ReplayReport report;
    std::vector<Color> colors(g.edge_slots(), kNoColor);
    std::unordered_map<std::size_t, std::vector<EdgeId>> block_edges;
    std::vector<bool> claimed(g.edge_slots(), false);
    std::unique_ptr<Segment> seg;
    std::optional<Coloring> global;
    VertexId next_vertex = static_cast<VertexId>(g.num_vertices());
    EdgeId next_edge = static_cast<EdgeId>(g.edge_slots());
    std::size_t index = 0;

    auto fail = [&](const std::string& why) {
        throw ReplayFailure{"record " + std::to_string(index + 1) + ": " + why};
    };

    auto close_segment = [&]() {
        if (!seg) return;
        if (!seg->active_pads.empty()) fail("block " + std::to_string(seg->block) + " ends with pendant edges left");
        if (!seg->pending.empty()) fail("block " + std::to_string(seg->block) + " ends with an uncolored edge");
        for (auto [ge, le] : seg->added) {
            Color k = seg->coloring->color(le);
            if (k == kNoColor) fail("block " + std::to_string(seg->block) + " ends with an uncolored edge");
            colors[ge] = k;
        }
        Verdict v = verify_acyclic(*seg->coloring);
        if (!v.ok()) fail("block " + std::to_string(seg->block) + ": " + v.describe(seg->graph));
        seg.reset();
    };

    auto lv = [&](VertexId v) {
        auto it = seg->vertex.find(v);
        if (it == seg->vertex.end()) fail("vertex " + std::to_string(v) + " not in the current block");
        return it->second;
    };
    auto le = [&](EdgeId e) {
        auto it = seg->edge.find(e);
        if (it == seg->edge.end() || !seg->graph.has_edge(it->second))
            fail("edge " + std::to_string(e) + " not in the current block");
        return it->second;
    };

    try {
        for (; index < trace.records.size(); ++index) {
            const TraceRecord& r = trace.records[index];
            using K = TraceRecord::Kind;
            if (r.kind == K::Block) {
                if (global) fail("BLOCK after MERGE");
                close_segment();
                if (block_edges.count(r.block)) fail("block " + std::to_string(r.block) + " repeated");
                for (EdgeId e : r.edges) {
                    if (!g.has_edge(e)) fail("unknown edge " + std::to_string(e));
                    if (claimed[e]) fail("edge " + std::to_string(e) + " in two blocks");
                    claimed[e] = true;
                }
                block_edges[r.block] = r.edges;
                seg = std::make_unique<Segment>();
                seg->block = r.block;
                for (EdgeId e : r.edges) {
                    for (VertexId v : {g.edge(e).u, g.edge(e).v})
                        if (!seg->vertex.count(v)) seg->vertex[v] = seg->graph.add_vertex();
                    seg->pending.insert(e);
                }
                seg->coloring.emplace(seg->graph, kBasePalette);
                continue;
            }
            if (r.kind == K::Permute) {
                if (global) fail("PERMUTE after MERGE");
                close_segment();
                auto it = block_edges.find(r.block);
                if (it == block_edges.end()) fail("PERMUTE of unknown block");
                ColorSet image;
                for (int q = 1; q <= kBasePalette; ++q) image.insert(r.perm[q]);
                if (image != ColorSet::palette(kBasePalette)) fail("PERMUTE is not a permutation");
                for (EdgeId e : it->second) colors[e] = r.perm[colors[e]];
                continue;
            }
            if (r.kind == K::Merge) {
                if (global) fail("second MERGE");
                close_segment();
                global.emplace(g, trace.palette);
                for (EdgeId e = 0; e < colors.size(); ++e)
                    if (colors[e] != kNoColor) global->set_raw(e, colors[e]);
                Verdict v = verify_acyclic(*global);
                if (!v.ok()) fail("merged blocks: " + v.describe(g));
                continue;
            }

            if (global) {
                Coloring& c = *global;
                switch (r.kind) {
                    case K::Assign:
                        if (r.color > trace.palette) fail("color outside the palette");
                        c.assign(r.edge, r.color);
                        break;
                    case K::Recolor:
                        if (r.color > trace.palette) fail("color outside the palette");
                        if (!g.has_edge(r.edge)) fail("unknown edge");
                        apply(c, recolor_move(r.edge, r.old_color, r.color));
                        break;
                    case K::Exchange: {
                        Move m;
                        m.kind = Move::Kind::Exchange;
                        m.u = r.u;
                        m.i = r.i;
                        m.j = r.j;
                        if (!g.has_vertex(r.u) || !g.has_vertex(r.i) || !g.has_vertex(r.j)) fail("unknown vertex");
                        apply(c, m);
                        break;
                    }
                    default: fail("padding after MERGE");
                }
                continue;
            }

            if (!seg) fail("move outside any block");
            Graph& lg = seg->graph;
            Coloring& c = *seg->coloring;
            switch (r.kind) {
                case K::Pad: {
                    if (r.v != next_vertex || r.edge != next_edge) fail("pendant ids must be fresh and consecutive");
                    ++next_vertex;
                    ++next_edge;
                    VertexId lu = lv(r.u);
                    VertexId lp = lg.add_vertex();
                    EdgeId lpe = lg.add_edge(lu, lp);
                    seg->vertex[r.v] = lp;
                    seg->edge[r.edge] = lpe;
                    seg->active_pads[r.edge] = lpe;
                    break;
                }
                case K::Unpad: {
                    auto it = seg->active_pads.find(r.edge);
                    if (it == seg->active_pads.end()) fail("UNPAD of an edge that is not padded");
                    c.unassign(it->second);
                    lg.remove_edge(it->second);
                    seg->active_pads.erase(it);
                    break;
                }
                case K::Assign:
                    if (r.color > kBasePalette) fail("block color outside the working palette");
                    if (seg->pending.erase(r.edge)) {
                        EdgeId local = lg.add_edge(lv(g.edge(r.edge).u), lv(g.edge(r.edge).v));
                        seg->edge[r.edge] = local;
                        seg->added.emplace_back(r.edge, local);
                    }
                    c.assign(le(r.edge), r.color);
                    break;
                case K::Recolor:
                    if (r.color > kBasePalette) fail("block color outside the working palette");
                    apply(c, recolor_move(le(r.edge), r.old_color, r.color));
                    break;
                case K::Exchange: {
                    Move m;
                    m.kind = Move::Kind::Exchange;
                    m.u = lv(r.u);
                    m.i = lv(r.i);
                    m.j = lv(r.j);
                    apply(c, m);
                    break;
                }
                default: fail("unexpected record");
            }
        }
        close_segment();
        if (!global) {
            // A trace of a graph without edges, or one that never merged.
            if (!block_edges.empty()) throw ReplayFailure{"trace ends without MERGE"};
            global.emplace(g, trace.palette);
        }
        if (!global->is_total()) throw ReplayFailure{"final coloring leaves edges uncolored"};
        Verdict v = verify_acyclic(*global);
        if (!v.ok()) throw ReplayFailure{"final coloring: " + v.describe(g)};
        report.colors.assign(g.edge_slots(), kNoColor);
        for (EdgeId e = 0; e < g.edge_slots(); ++e) report.colors[e] = global->color(e);
        report.ok = true;
        report.message = "ok";
    } catch (const ReplayFailure& f) {
        report.message = f.message;
    } catch (const Error& err) {
        report.message = "record " + std::to_string(index + 1) + ": " + err.what();
    }
    return report;
}

}  // namespace aec
