#include "instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace aec::testing {

namespace {

Graph build(const std::vector<ColoredEdge>& edges, std::size_t n) {
    for (const auto& e : edges) n = std::max<std::size_t>(n, std::max(e.u, e.v) + 1);
    Graph g(n);
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
}

}  // namespace

Instance::Instance(std::initializer_list<ColoredEdge> edges, int palette, std::size_t n)
    : Instance(std::vector<ColoredEdge>(edges), palette, n) {}

Instance::Instance(const std::vector<ColoredEdge>& edges, int palette, std::size_t n)
    : g(build(edges, n)), c(g, palette) {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].color != kNoColor) c.set_raw(static_cast<EdgeId>(i), edges[i].color);
}

EdgeId Instance::edge(VertexId u, VertexId v) const {
    EdgeId e = g.find_edge(u, v);
    if (e == kNone) throw std::logic_error("test instance has no such edge");
    return e;
}

PaddingRecord Instance::pad(VertexId x, VertexId y) {
    PaddingRecord rec = pad_for_extension(g, x, y);
    for (EdgeId e : rec.added_edges) c.assign(e, c.candidates(e).first());
    return rec;
}

}  // namespace aec::testing
