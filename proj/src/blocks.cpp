#include "aec/blocks.hpp"

#include <algorithm>
#include <string>

#include "aec/error.hpp"

namespace aec {

std::vector<VertexId> BlockDecomposition::vertices_of(const Graph& g, std::size_t b) const {
    std::vector<VertexId> vs;
    for (EdgeId e : blocks[b]) {
        vs.push_back(g.edge(e).u);
        vs.push_back(g.edge(e).v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::size_t BlockDecomposition::cut_index(VertexId v) const {
    auto it = std::lower_bound(cut_vertices.begin(), cut_vertices.end(), v);
    if (it == cut_vertices.end() || *it != v) return kNone;
    return static_cast<std::size_t>(it - cut_vertices.begin());
}

BlockDecomposition blocks(const Graph& g) {
    if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "block decomposition needs a connected graph");
    BlockDecomposition out;
    const std::size_t n = g.num_vertices();
    if (n == 0 || g.num_edges() == 0) return out;

    struct Frame {
        VertexId v;
        EdgeId parent_edge;
        int next;
    };
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Frame> frames;
    std::vector<EdgeId> edge_stack;
    int timer = 0;

    disc[0] = low[0] = timer++;
    frames.push_back({0, kNone, 0});
    while (!frames.empty()) {
        Frame& f = frames.back();
        VertexId v = f.v;
        auto inc = g.incident(v);
        if (f.next < static_cast<int>(inc.size())) {
            EdgeId e = inc[f.next++];
            if (e == f.parent_edge) continue;
            VertexId w = g.other(e, v);
            if (disc[w] == -1) {
                edge_stack.push_back(e);
                disc[w] = low[w] = timer++;
                frames.push_back({w, e, 0});
            } else if (disc[w] < disc[v]) {
                edge_stack.push_back(e);
                low[v] = std::min(low[v], disc[w]);
            }
            continue;
        }
        EdgeId parent_edge = f.parent_edge;
        frames.pop_back();
        if (frames.empty()) break;
        VertexId p = frames.back().v;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) {
            auto& block = out.blocks.emplace_back();
            while (true) {
                EdgeId top = edge_stack.back();
                edge_stack.pop_back();
                block.push_back(top);
                if (top == parent_edge) break;
            }
            std::sort(block.begin(), block.end());
        }
    }

    // A vertex is a cut vertex iff it lies in two or more blocks.
    std::vector<int> count(n, 0);
    for (std::size_t b = 0; b < out.blocks.size(); ++b)
        for (VertexId v : out.vertices_of(g, b)) ++count[v];
    for (VertexId v = 0; v < n; ++v)
        if (count[v] >= 2) out.cut_vertices.push_back(v);

    out.cuts_of_block.resize(out.blocks.size());
    out.blocks_of_cut.resize(out.cut_vertices.size());
    for (std::size_t b = 0; b < out.blocks.size(); ++b) {
        for (VertexId v : out.vertices_of(g, b)) {
            if (count[v] < 2) continue;
            out.cuts_of_block[b].push_back(v);
            out.blocks_of_cut[out.cut_index(v)].push_back(b);
        }
    }
    return out;
}

PaddingRecord pad_for_extension(Graph& g, VertexId x, VertexId y) {
    if (!g.has_vertex(x) || !g.has_vertex(y) || x == y)
        throw Error(ErrorKind::PreconditionViolated, "padding needs two distinct vertices");
    if (g.adjacent(x, y)) throw Error(ErrorKind::PreconditionViolated, "padding needs xy absent");
    if (g.degree(x) > 2 || g.degree(y) > 3)
        throw Error(ErrorKind::PreconditionViolated,
                    "padding needs deg(x)<=2 and deg(y)<=3, got " + std::to_string(g.degree(x)) + "," +
                        std::to_string(g.degree(y)));

    PaddingRecord rec;
    rec.x = x;
    rec.y = y;
    rec.vertex_slots_before = g.num_vertices();
    rec.edge_slots_before = g.edge_slots();

    auto raise = [&](VertexId z, int target) {
        if (g.degree(z) >= target) return;
        rec.targets.emplace_back(z, target);
        while (g.degree(z) < target) {
            VertexId p = g.add_vertex();
            rec.added_vertices.push_back(p);
            rec.added_edges.push_back(g.add_edge(z, p));
        }
    };

    raise(x, 2);
    raise(y, 3);

    std::vector<VertexId> around;
    for (VertexId c : {x, y})
        for (EdgeId e : g.incident(c)) {
            VertexId z = g.other(e, c);
            if (std::find(around.begin(), around.end(), z) == around.end()) around.push_back(z);
        }
    for (VertexId z : around) raise(z, kMaxDegree);
    return rec;
}

void strip_padding(Graph& g, const PaddingRecord& record) {
    for (auto it = record.added_edges.rbegin(); it != record.added_edges.rend(); ++it) g.remove_edge(*it);
    g.truncate(record.vertex_slots_before, record.edge_slots_before);
}

}  // namespace aec
