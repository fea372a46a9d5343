#include "aec/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "aec/error.hpp"

namespace aec {

Graph::Graph(std::size_t n) : adjacency_(n) {}

VertexId Graph::add_vertex() {
    adjacency_.emplace_back();
    return static_cast<VertexId>(adjacency_.size() - 1);
}

EdgeId Graph::add_edge(VertexId u, VertexId v) {
    if (!has_vertex(u) || !has_vertex(v))
        throw Error(ErrorKind::UnknownVertex, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v) throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(u));
    if (adjacent(u, v))
        throw Error(ErrorKind::DuplicateEdge, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (degree(u) >= kMaxDegree || degree(v) >= kMaxDegree)
        throw Error(ErrorKind::DegreeViolation,
                    "adding (" + std::to_string(u) + "," + std::to_string(v) + ") exceeds degree 4");
    auto e = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v, true});
    removals_.emplace_back();
    attach(u, e, adjacency_[u].count);
    attach(v, e, adjacency_[v].count);
    ++alive_edges_;
    return e;
}

void Graph::detach(VertexId v, EdgeId e, std::uint8_t& pos) {
    auto& a = adjacency_[v];
    auto it = std::find(a.edges.begin(), a.edges.begin() + a.count, e);
    pos = static_cast<std::uint8_t>(it - a.edges.begin());
    std::copy(it + 1, a.edges.begin() + a.count, it);
    --a.count;
    a.edges[a.count] = kNone;
}

void Graph::attach(VertexId v, EdgeId e, std::uint8_t pos) {
    auto& a = adjacency_[v];
    pos = std::min<std::uint8_t>(pos, a.count);
    std::copy_backward(a.edges.begin() + pos, a.edges.begin() + a.count, a.edges.begin() + a.count + 1);
    a.edges[pos] = e;
    ++a.count;
}

void Graph::remove_edge(EdgeId e) {
    if (!has_edge(e)) throw Error(ErrorKind::UnknownEdge, "remove of edge " + std::to_string(e));
    auto& ed = edges_[e];
    detach(ed.u, e, removals_[e].pos_u);
    detach(ed.v, e, removals_[e].pos_v);
    ed.alive = false;
    --alive_edges_;
}

void Graph::restore_edge(EdgeId e) {
    if (e >= edges_.size() || edges_[e].alive)
        throw Error(ErrorKind::UnknownEdge, "restore of edge " + std::to_string(e));
    auto& ed = edges_[e];
    if (degree(ed.u) >= kMaxDegree || degree(ed.v) >= kMaxDegree)
        throw Error(ErrorKind::DegreeViolation, "restoring edge " + std::to_string(e));
    attach(ed.u, e, removals_[e].pos_u);
    attach(ed.v, e, removals_[e].pos_v);
    ed.alive = true;
    ++alive_edges_;
}

void Graph::truncate(std::size_t vertex_slots, std::size_t edge_slots) {
    for (std::size_t e = edge_slots; e < edges_.size(); ++e)
        if (edges_[e].alive) throw Error(ErrorKind::PreconditionViolated, "truncating a live edge");
    for (std::size_t v = vertex_slots; v < adjacency_.size(); ++v)
        if (adjacency_[v].count != 0) throw Error(ErrorKind::PreconditionViolated, "truncating a non-isolated vertex");
    if (edge_slots < edges_.size()) {
        edges_.resize(edge_slots);
        removals_.resize(edge_slots);
    }
    if (vertex_slots < adjacency_.size()) adjacency_.resize(vertex_slots);
}

const Edge& Graph::edge(EdgeId e) const {
    if (e >= edges_.size()) throw Error(ErrorKind::UnknownEdge, "edge " + std::to_string(e));
    return edges_[e];
}

EdgeId Graph::find_edge(VertexId u, VertexId v) const {
    for (EdgeId e : incident(u))
        if (edges_[e].other(u) == v) return e;
    return kNone;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adjacency_) d = std::max<int>(d, a.count);
    return d;
}

std::vector<std::vector<VertexId>> Graph::components() const {
    std::vector<std::vector<VertexId>> out;
    std::vector<char> seen(num_vertices(), 0);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < num_vertices(); ++s) {
        if (seen[s]) continue;
        auto& comp = out.emplace_back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (EdgeId e : incident(v)) {
                VertexId w = other(e, v);
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
    }
    return out;
}

bool Graph::is_connected() const { return num_vertices() <= 1 || components().size() == 1; }

std::vector<std::pair<VertexId, VertexId>> Graph::edge_list() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(alive_edges_);
    for (const auto& e : edges_)
        if (e.alive) out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    return out;
}

std::vector<EdgeId> Graph::edge_ids() const {
    std::vector<EdgeId> out;
    out.reserve(alive_edges_);
    for (EdgeId e = 0; e < edges_.size(); ++e)
        if (edges_[e].alive) out.push_back(e);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    if (adjacency_ != other.adjacency_ || alive_edges_ != other.alive_edges_) return false;
    if (edges_.size() != other.edges_.size()) return false;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& a = edges_[e];
        const auto& b = other.edges_[e];
        if (a.alive != b.alive) return false;
        if (a.alive && (a.u != b.u || a.v != b.v)) return false;
    }
    return true;
}

Graph make_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges) {
    Subgraph s;
    std::unordered_map<VertexId, VertexId> local;
    local.reserve(edges.size() * 2);
    auto map_vertex = [&](VertexId v) {
        auto [it, fresh] = local.try_emplace(v, kNone);
        if (fresh) {
            it->second = s.graph.add_vertex();
            s.vertex_map.push_back(v);
        }
        return it->second;
    };
    for (EdgeId e : edges) {
        const auto& ed = g.edge(e);
        VertexId u = map_vertex(ed.u);
        VertexId v = map_vertex(ed.v);
        s.graph.add_edge(u, v);
        s.edge_map.push_back(e);
    }
    return s;
}

}  // namespace aec
