#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace aec {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
inline constexpr int kMaxDegree = 4;

struct Edge {
    VertexId u = kNone;
    VertexId v = kNone;
    bool alive = false;

    VertexId other(VertexId w) const { return w == u ? v : u; }
};

/// Undirected simple graph with maximum degree 4.
///
/// Vertex and edge ids are dense and stable: removing an edge keeps its slot
/// so it can be restored later under the same id. Adjacency is kept compact
/// (no holes); remove_edge records where the edge sat so restore_edge can put
/// it back in the same position.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    VertexId add_vertex();
    EdgeId add_edge(VertexId u, VertexId v);

    void remove_edge(EdgeId e);
    void restore_edge(EdgeId e);

    /// Drops trailing vertex and edge slots. Everything dropped must already
    /// be removed (edges) or isolated (vertices).
    void truncate(std::size_t vertex_slots, std::size_t edge_slots);

    std::size_t num_vertices() const { return adjacency_.size(); }
    std::size_t num_edges() const { return alive_edges_; }
    std::size_t edge_slots() const { return edges_.size(); }

    bool has_vertex(VertexId v) const { return v < adjacency_.size(); }
    bool has_edge(EdgeId e) const { return e < edges_.size() && edges_[e].alive; }
    const Edge& edge(EdgeId e) const;

    int degree(VertexId v) const { return adjacency_[v].count; }
    std::span<const EdgeId> incident(VertexId v) const {
        const auto& a = adjacency_[v];
        return {a.edges.data(), static_cast<std::size_t>(a.count)};
    }
    VertexId other(EdgeId e, VertexId v) const { return edges_[e].other(v); }

    /// Live edge between u and v, or kNone.
    EdgeId find_edge(VertexId u, VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const { return find_edge(u, v) != kNone; }

    int max_degree() const;
    bool is_connected() const;
    std::vector<std::vector<VertexId>> components() const;

    /// Alive edges as (u, v) with u < v, in edge-id order.
    std::vector<std::pair<VertexId, VertexId>> edge_list() const;
    std::vector<EdgeId> edge_ids() const;

    bool operator==(const Graph& other) const;

private:
    struct Slots {
        std::array<EdgeId, kMaxDegree> edges{kNone, kNone, kNone, kNone};
        std::uint8_t count = 0;
        bool operator==(const Slots&) const = default;
    };
    struct Removal {
        std::uint8_t pos_u = 0;
        std::uint8_t pos_v = 0;
    };

    void detach(VertexId v, EdgeId e, std::uint8_t& pos);
    void attach(VertexId v, EdgeId e, std::uint8_t pos);

    std::vector<Slots> adjacency_;
    std::vector<Edge> edges_;
    std::vector<Removal> removals_;
    std::size_t alive_edges_ = 0;
};

/// Builds a graph from an edge list, enforcing simplicity and the degree cap.
Graph make_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);

/// Induced subgraph on a set of edges, with vertices renumbered densely.
/// vertex_map[i] is the original id of local vertex i; edge_map likewise.
struct Subgraph {
    Graph graph;
    std::vector<VertexId> vertex_map;
    std::vector<EdgeId> edge_map;
};
Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges);

}  // namespace aec
