#include "aec/driver.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "aec/blocks.hpp"
#include "aec/error.hpp"
#include "aec/paths.hpp"
#include "aec/rng.hpp"

namespace aec {

namespace {

// Global ids for pendant vertices and edges written to the trace.
struct TraceIds {
    Trace* trace = nullptr;
    VertexId next_vertex = 0;
    EdgeId next_edge = 0;
};

void push(Trace* t, TraceRecord r) {
    if (t) t->records.push_back(std::move(r));
}

// Colors one block with six colors by peeling edges off a vertex of least
// degree and adding them back one at a time through the extension step.
std::vector<Color> color_block(const Graph& g, const std::vector<EdgeId>& edges, const DriverOptions& opts,
                               DriverStats& stats, TraceIds& ids, Rng& rng) {
    Subgraph sub = edge_subgraph(g, edges);
    Graph& h = sub.graph;
    const std::size_t base_vertices = h.num_vertices();

    std::array<std::set<VertexId>, kMaxDegree + 1> bucket;
    for (VertexId v = 0; v < h.num_vertices(); ++v) bucket[h.degree(v)].insert(v);
    auto move_bucket = [&](VertexId v, int from) {
        bucket[from].erase(v);
        bucket[h.degree(v)].insert(v);
    };

    std::vector<std::pair<EdgeId, VertexId>> peeled;  // edge and its low-degree end
    peeled.reserve(h.num_edges());
    while (h.num_edges() > 0) {
        int d = 1;
        while (d <= kMaxDegree && bucket[d].empty()) ++d;
        if (d >= kMaxDegree)
            throw Error(ErrorKind::InternalError, "peeling met a piece with minimum degree 4");
        VertexId x = *bucket[d].begin();
        VertexId y = kNone;
        EdgeId xy = kNone;
        for (EdgeId e : h.incident(x)) {
            VertexId z = h.other(e, x);
            if (y == kNone || h.degree(z) < h.degree(y) || (h.degree(z) == h.degree(y) && z < y)) {
                y = z;
                xy = e;
            }
        }
        int dx = h.degree(x), dy = h.degree(y);
        h.remove_edge(xy);
        move_bucket(x, dx);
        move_bucket(y, dy);
        peeled.emplace_back(xy, x);
    }

    Coloring col(h, kBasePalette);
    ExtendOptions eo;
    eo.debug = opts.debug;
    Trace* t = ids.trace;

    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        auto [e, x] = *it;
        VertexId y = h.edge(e).other(x);
        if ((col.at(x) | col.at(y)).empty()) {
            // Nothing colored next to xy: any color will do.
            h.restore_edge(e);
            col.assign(e, 1);
            ++stats.extensions;
            if (t) {
                TraceRecord r;
                r.kind = TraceRecord::Kind::Assign;
                r.edge = sub.edge_map[e];
                r.color = 1;
                r.tag = "first";
                push(t, std::move(r));
            }
            continue;
        }
        PaddingRecord rec = pad_for_extension(h, x, y);

        std::vector<VertexId> pad_vertex(rec.added_vertices.size());
        std::vector<EdgeId> pad_edge(rec.added_edges.size());
        auto gv = [&](VertexId v) {
            return v < base_vertices ? sub.vertex_map[v] : pad_vertex[v - rec.vertex_slots_before];
        };
        auto ge = [&](EdgeId le) {
            return le < sub.edge_map.size() ? sub.edge_map[le] : pad_edge[le - rec.edge_slots_before];
        };
        if (t) {
            for (std::size_t i = 0; i < rec.added_edges.size(); ++i) {
                pad_vertex[i] = ids.next_vertex++;
                pad_edge[i] = ids.next_edge++;
                const Edge& pe = h.edge(rec.added_edges[i]);
                VertexId anchor = pe.u == rec.added_vertices[i] ? pe.v : pe.u;
                TraceRecord r;
                r.kind = TraceRecord::Kind::Pad;
                r.edge = pad_edge[i];
                r.u = gv(anchor);
                r.v = pad_vertex[i];
                push(t, std::move(r));
            }
        }
        for (EdgeId pe : rec.added_edges) {
            ColorSet cands = col.candidates(pe);
            Color k = cands.first();
            if (opts.pendant_seed != 0) {
                auto v = cands.to_vector();
                k = v[rng.below(v.size())];
            }
            col.assign(pe, k);
            if (t) {
                TraceRecord r;
                r.kind = TraceRecord::Kind::Assign;
                r.edge = ge(pe);
                r.color = k;
                r.tag = "pad";
                push(t, std::move(r));
            }
        }

        ExtensionOutcome out = extend(col, x, y, eo);
        ++stats.extensions;
        ++stats.cases[static_cast<std::size_t>(out.initial_case)];
        stats.moves += out.moves.size();
        stats.reentries += out.reentered;

        if (t) {
            for (const Move& m : out.moves) {
                TraceRecord r;
                r.tag = m.tag;
                if (m.kind == Move::Kind::Exchange) {
                    r.kind = TraceRecord::Kind::Exchange;
                    r.u = gv(m.u);
                    r.i = gv(m.i);
                    r.j = gv(m.j);
                } else {
                    r.kind = TraceRecord::Kind::Recolor;
                    r.edge = ge(m.edge);
                    r.old_color = m.old_color;
                    r.color = m.new_color;
                }
                push(t, std::move(r));
            }
        }

        for (auto pe = rec.added_edges.rbegin(); pe != rec.added_edges.rend(); ++pe) {
            col.unassign(*pe);
            if (t) {
                TraceRecord r;
                r.kind = TraceRecord::Kind::Unpad;
                r.edge = ge(*pe);
                push(t, std::move(r));
            }
        }
        strip_padding(h, rec);
        h.restore_edge(e);
        col.assign(e, out.color);
        if (t) {
            TraceRecord r;
            r.kind = TraceRecord::Kind::Assign;
            r.edge = sub.edge_map[e];
            r.color = out.color;
            r.tag = out.steps.empty() ? std::string("extend") : out.steps.back();
            push(t, std::move(r));
        }
        if (opts.debug) {
            Verdict v = verify_acyclic(col);
            if (!v.ok()) throw Error(ErrorKind::InternalError, "block coloring after extension: " + v.describe(h));
        }
    }

    std::vector<Color> colors(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) colors[i] = col.color(static_cast<EdgeId>(i));
    return colors;
}

// Colors every block, merges them and records the whole run in the trace.
std::vector<Color> color_blocks(const Graph& g, const std::vector<std::vector<EdgeId>>& blocks,
                                const DriverOptions& opts, DriverStats& stats) {
    TraceIds ids{opts.trace, static_cast<VertexId>(g.num_vertices()), static_cast<EdgeId>(g.edge_slots())};
    Rng rng(opts.pendant_seed);
    std::vector<std::vector<Color>> block_colors;
    block_colors.reserve(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& edges = blocks[b];
        std::set<VertexId> verts;
        for (EdgeId e : edges) {
            verts.insert(g.edge(e).u);
            verts.insert(g.edge(e).v);
        }
        if (edges.size() + 1 > 2 * verts.size())
            throw Error(ErrorKind::InternalError, "block " + std::to_string(b) + " has m = 2n");
        TraceRecord r;
        r.kind = TraceRecord::Kind::Block;
        r.block = b;
        r.edges = edges;
        push(opts.trace, std::move(r));
        block_colors.push_back(color_block(g, edges, opts, stats, ids, rng));
    }

    MergeResult merged = merge_blocks(g, blocks, block_colors);
    if (opts.trace) {
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            bool identity = true;
            for (int q = 1; q <= kBasePalette; ++q) identity = identity && merged.perms[b][q] == q;
            if (identity) continue;
            TraceRecord r;
            r.kind = TraceRecord::Kind::Permute;
            r.block = b;
            r.perm = merged.perms[b];
            push(opts.trace, std::move(r));
        }
        TraceRecord r;
        r.kind = TraceRecord::Kind::Merge;
        push(opts.trace, std::move(r));
    }
    return merged.colors;
}

void begin_trace(const DriverOptions& opts, int palette) {
    if (!opts.trace) return;
    opts.trace->palette = palette;
    opts.trace->records.clear();
}

}  // namespace

MergeResult merge_blocks(const Graph& g, const std::vector<std::vector<EdgeId>>& blocks,
                         const std::vector<std::vector<Color>>& block_colors) {
    MergeResult out;
    out.colors.assign(g.edge_slots(), kNoColor);
    out.perms.assign(blocks.size(), {});
    if (block_colors.size() != blocks.size()) throw Error(ErrorKind::InternalError, "merge: block count mismatch");

    // Blocks through each vertex that lies in more than one of them.
    std::vector<std::vector<std::size_t>> at(g.num_vertices());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (EdgeId e : blocks[b])
            for (VertexId v : {g.edge(e).u, g.edge(e).v})
                if (at[v].empty() || at[v].back() != b) at[v].push_back(b);
    }

    const ColorSet palette = ColorSet::palette(kBasePalette);
    std::vector<bool> placed(blocks.size(), false);
    auto colors_at = [&](VertexId v) {
        ColorSet s;
        for (EdgeId e : g.incident(v))
            if (out.colors[e] != kNoColor) s.insert(out.colors[e]);
        return s;
    };
    auto place = [&](std::size_t b, VertexId v) {
        ColorSet used, q;
        for (std::size_t i = 0; i < blocks[b].size(); ++i) {
            Color k = block_colors[b][i];
            if (k == kNoColor || k > kBasePalette) throw Error(ErrorKind::InternalError, "merge: block not colored");
            used.insert(k);
            const Edge& ed = g.edge(blocks[b][i]);
            if (ed.u == v || ed.v == v) q.insert(k);
        }
        auto& perm = out.perms[b];
        for (int k = 1; k <= kBasePalette; ++k) perm[k] = static_cast<Color>(k);
        ColorSet r = v == kNone ? ColorSet{} : colors_at(v);
        if (!(q & r).empty()) {
            // Send q onto free colors, preferring ones the block does not use.
            ColorSet avail = palette - r, taken;
            for (Color k : q.to_vector()) {
                ColorSet pool = (avail - used) - taken;
                if (pool.empty()) pool = avail - taken;
                if (pool.empty()) throw Error(ErrorKind::InternalError, "merge: no free color at a cut vertex");
                perm[k] = pool.first();
                taken.insert(perm[k]);
            }
            auto rest_src = (palette - q).to_vector();
            auto rest_dst = (palette - taken).to_vector();
            for (std::size_t i = 0; i < rest_src.size(); ++i) perm[rest_src[i]] = rest_dst[i];
        }
        for (std::size_t i = 0; i < blocks[b].size(); ++i) out.colors[blocks[b][i]] = perm[block_colors[b][i]];
        placed[b] = true;
    };

    for (std::size_t root = 0; root < blocks.size(); ++root) {
        if (placed[root]) continue;
        place(root, kNone);
        std::vector<std::size_t> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            std::size_t b = queue[qi];
            for (EdgeId e : blocks[b])
                for (VertexId v : {g.edge(e).u, g.edge(e).v}) {
                    if (at[v].size() < 2) continue;
                    for (std::size_t other : at[v]) {
                        if (placed[other]) continue;
                        place(other, v);
                        queue.push_back(other);
                    }
                }
        }
    }
    return out;
}

Coloring color_connected_6(const Graph& g, const DriverOptions& opts, DriverStats* stats) {
    if (g.num_vertices() == 0) throw Error(ErrorKind::PreconditionViolated, "empty graph");
    if (!g.is_connected()) throw Error(ErrorKind::PreconditionViolated, "graph is not connected");
    if (g.max_degree() > kMaxDegree) throw Error(ErrorKind::PreconditionViolated, "maximum degree above 4");
    if (g.num_edges() + 1 > 2 * g.num_vertices())
        throw Error(ErrorKind::PreconditionViolated, "m = " + std::to_string(g.num_edges()) + " exceeds 2n - 1 = " +
                                                         std::to_string(2 * g.num_vertices() - 1));
    DriverStats local;
    DriverStats& st = stats ? *stats : local;
    reset_path_steps();
    begin_trace(opts, kBasePalette);

    Coloring out(g, kBasePalette);
    if (g.num_edges() > 0) {
        BlockDecomposition bd = blocks(g);
        std::vector<Color> colors = color_blocks(g, bd.blocks, opts, st);
        for (EdgeId e = 0; e < colors.size(); ++e)
            if (colors[e] != kNoColor) out.set_raw(e, colors[e]);
    }
    st.path_steps += path_steps();
    if (opts.debug) {
        Verdict v = verify_acyclic(out);
        if (!v.ok()) throw Error(ErrorKind::InternalError, "merged coloring: " + v.describe(g));
    }
    return out;
}

Coloring color_graph_7(const Graph& g, const DriverOptions& opts, DriverStats* stats) {
    if (g.max_degree() > kMaxDegree) throw Error(ErrorKind::PreconditionViolated, "maximum degree above 4");
    DriverStats local;
    DriverStats& st = stats ? *stats : local;
    reset_path_steps();
    begin_trace(opts, kMaxPalette);

    std::vector<std::vector<EdgeId>> all_blocks;
    std::vector<EdgeId> extra;
    for (const auto& comp : g.components()) {
        std::vector<EdgeId> edges;
        for (VertexId v : comp)
            for (EdgeId e : g.incident(v))
                if (g.other(e, v) > v) edges.push_back(e);
        if (edges.empty()) continue;
        std::sort(edges.begin(), edges.end());
        if (edges.size() >= 2 * comp.size()) {
            extra.push_back(edges.front());
            edges.erase(edges.begin());
        }
        Subgraph sub = edge_subgraph(g, edges);
        BlockDecomposition bd = blocks(sub.graph);
        for (auto& blk : bd.blocks) {
            for (EdgeId& e : blk) e = sub.edge_map[e];
            std::sort(blk.begin(), blk.end());
            all_blocks.push_back(std::move(blk));
        }
    }

    Coloring out(g, kMaxPalette);
    std::vector<Color> colors = color_blocks(g, all_blocks, opts, st);
    for (EdgeId e = 0; e < colors.size(); ++e)
        if (colors[e] != kNoColor) out.set_raw(e, colors[e]);
    for (EdgeId e : extra) {
        out.assign(e, static_cast<Color>(kMaxPalette));
        if (opts.trace) {
            TraceRecord r;
            r.kind = TraceRecord::Kind::Assign;
            r.edge = e;
            r.color = static_cast<Color>(kMaxPalette);
            r.tag = "extra-color";
            opts.trace->records.push_back(std::move(r));
        }
    }
    st.path_steps += path_steps();
    if (opts.debug) {
        Verdict v = verify_acyclic(out);
        if (!v.ok()) throw Error(ErrorKind::InternalError, "seven-color result: " + v.describe(g));
    }
    return out;
}

}  // namespace aec
