#pragma once

#include <cstddef>
#include <vector>

#include "aec/graph.hpp"

namespace aec {

/// Biconnected components of a connected graph.
///
/// Each block is a list of edge ids (a 2-connected piece or a single bridge).
/// The block tree is stored as two incidence lists: cuts_of_block[b] lists the
/// cut vertices lying in block b, blocks_of_cut maps a cut vertex (by its
/// position in cut_vertices) to the blocks that contain it.
struct BlockDecomposition {
    std::vector<std::vector<EdgeId>> blocks;
    std::vector<VertexId> cut_vertices;
    std::vector<std::vector<VertexId>> cuts_of_block;
    std::vector<std::vector<std::size_t>> blocks_of_cut;

    /// Vertices touched by block b, sorted.
    std::vector<VertexId> vertices_of(const Graph& g, std::size_t b) const;
    std::size_t cut_index(VertexId v) const;
};

/// Iterative low-point traversal; throws Disconnected if g is not connected.
BlockDecomposition blocks(const Graph& g);

/// Pendant vertices and edges added around an edge slot xy so that x has
/// degree 2, y degree 3 and every neighbour of either has degree 4.
struct PaddingRecord {
    VertexId x = kNone;
    VertexId y = kNone;
    std::vector<VertexId> added_vertices;
    std::vector<EdgeId> added_edges;
    /// (vertex, padded degree) for every vertex whose degree was raised.
    std::vector<std::pair<VertexId, int>> targets;
    std::size_t vertex_slots_before = 0;
    std::size_t edge_slots_before = 0;

    bool empty() const { return added_edges.empty(); }
};

/// Requires xy absent, degree(x) <= 2 and degree(y) <= 3.
PaddingRecord pad_for_extension(Graph& g, VertexId x, VertexId y);

/// Removes the padding again. Must be called in LIFO order relative to other
/// mutations; the trailing vertex/edge slots created by the padding are freed.
void strip_padding(Graph& g, const PaddingRecord& record);

}  // namespace aec
