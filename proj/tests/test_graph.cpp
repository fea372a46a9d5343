#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "aec/blocks.hpp"
#include "aec/error.hpp"
#include "aec/generators.hpp"
#include "aec/graph.hpp"
#include "aec/rng.hpp"
#include "enumerate.hpp"
#include "naive.hpp"

using namespace aec;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InternalError;
}

Graph from(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges) { return make_graph(n, edges); }

// Brute force: the block's vertices stay connected (through block edges)
// after deleting any one of them.
bool two_connected(const Graph& g, const std::vector<EdgeId>& block) {
    std::set<VertexId> verts;
    for (EdgeId e : block) verts.insert({g.edge(e).u, g.edge(e).v});
    if (verts.size() < 3) return false;
    for (VertexId cut : verts) {
        std::set<VertexId> reached;
        VertexId start = *std::find_if(verts.begin(), verts.end(), [&](VertexId v) { return v != cut; });
        std::vector<VertexId> todo{start};
        reached.insert(start);
        while (!todo.empty()) {
            VertexId v = todo.back();
            todo.pop_back();
            for (EdgeId e : block) {
                VertexId a = g.edge(e).u, b = g.edge(e).v;
                if (a == cut || b == cut || (a != v && b != v)) continue;
                VertexId w = a == v ? b : a;
                if (reached.insert(w).second) todo.push_back(w);
            }
        }
        if (reached.size() + 1 != verts.size()) return false;
    }
    return true;
}

Graph random_connected(aec::Rng& rng, std::size_t lo, std::size_t hi) {
    for (;;) {
        std::size_t n = lo + rng.below(hi - lo + 1);
        Graph g = testing::random_graph(n, n - 1 + rng.below(n + 2), rng);
        if (g.is_connected()) return g;
    }
}

}  // namespace

TEST_CASE("add_edge updates degrees") {
    Graph g(3);
    g.add_edge(1, 2);
    CHECK(g.degree(1) == 1);
    CHECK(g.degree(2) == 1);
    CHECK(g.degree(0) == 0);
}

TEST_CASE("add_edge refuses a fifth edge at a vertex") {
    Graph g = from(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(kind_of([&] { g.add_edge(0, 5); }) == ErrorKind::DegreeViolation);
    CHECK(g.num_edges() == 4);
}

TEST_CASE("closing a path gives a triangle") {
    Graph g = from(3, {{0, 1}, {1, 2}});
    g.add_edge(0, 2);
    for (VertexId v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
    CHECK(g.num_edges() == 3);
}

TEST_CASE("add_edge rejects loops and parallel edges") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK(kind_of([&] { g.add_edge(1, 0); }) == ErrorKind::DuplicateEdge);
    CHECK(kind_of([&] { g.add_edge(2, 2); }) == ErrorKind::SelfLoop);
    CHECK(kind_of([&] { g.add_edge(0, 7); }) == ErrorKind::UnknownVertex);
}

TEST_CASE("remove then restore gives back the same graph") {
    aec::Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        Graph g = testing::random_graph(12, 20, rng);
        const Graph before = g;
        for (EdgeId e : before.edge_ids()) {
            g.remove_edge(e);
            CHECK_FALSE(g.has_edge(e));
            g.restore_edge(e);
            CHECK(g == before);
        }
        // Nested removals undone in reverse order.
        std::vector<EdgeId> ids = before.edge_ids();
        rng.shuffle(ids);
        for (EdgeId e : ids) g.remove_edge(e);
        CHECK(g.num_edges() == 0);
        for (auto it = ids.rbegin(); it != ids.rend(); ++it) g.restore_edge(*it);
        CHECK(g == before);
    }
}

TEST_CASE("removing the bridge between two triangles splits the graph") {
    Graph g = from(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
    g.remove_edge(g.find_edge(2, 3));
    CHECK(g.components().size() == 2);
}

TEST_CASE("removing an edge of a triangle leaves a path") {
    Graph g = from(3, {{0, 1}, {1, 2}, {2, 0}});
    g.remove_edge(g.find_edge(2, 0));
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
}

TEST_CASE("remove and restore reject unknown edges") {
    Graph g = from(3, {{0, 1}});
    CHECK(kind_of([&] { g.remove_edge(5); }) == ErrorKind::UnknownEdge);
    CHECK(kind_of([&] { g.restore_edge(0); }) == ErrorKind::UnknownEdge);
    g.remove_edge(0);
    CHECK(kind_of([&] { g.remove_edge(0); }) == ErrorKind::UnknownEdge);
}

TEST_CASE("blocks of a five-cycle") {
    BlockDecomposition bd = blocks(cycle_graph(5));
    CHECK(bd.blocks.size() == 1);
    CHECK(bd.blocks[0].size() == 5);
    CHECK(bd.cut_vertices.empty());
}

TEST_CASE("blocks of two triangles sharing a vertex") {
    Graph g = from(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    BlockDecomposition bd = blocks(g);
    CHECK(bd.blocks.size() == 2);
    CHECK(bd.cut_vertices == std::vector<VertexId>{2});
    CHECK(bd.blocks_of_cut[0].size() == 2);
}

TEST_CASE("blocks of a path on four vertices") {
    BlockDecomposition bd = blocks(from(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(bd.blocks.size() == 3);
    for (const auto& b : bd.blocks) CHECK(b.size() == 1);
    std::vector<VertexId> cuts = bd.cut_vertices;
    std::sort(cuts.begin(), cuts.end());
    CHECK(cuts == std::vector<VertexId>{1, 2});
}

TEST_CASE("blocks needs a connected graph") {
    CHECK(kind_of([] { blocks(from(4, {{0, 1}, {2, 3}})); }) == ErrorKind::Disconnected);
}

TEST_CASE("blocks partition the edges into 2-connected pieces and bridges") {
    aec::Rng rng(5);
    for (int t = 0; t < 300; ++t) {
        Graph g = random_connected(rng, 2, 12);
        BlockDecomposition bd = blocks(g);
        std::vector<int> hits(g.edge_slots(), 0);
        for (const auto& b : bd.blocks) {
            for (EdgeId e : b) ++hits[e];
            CHECK((b.size() == 1 || two_connected(g, b)));
        }
        for (EdgeId e : g.edge_ids()) CHECK(hits[e] == 1);
        // Cut vertices are exactly the vertices whose deletion disconnects g.
        std::vector<VertexId> cuts = bd.cut_vertices;
        std::sort(cuts.begin(), cuts.end());
        std::vector<VertexId> brute;
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            Graph h = g;
            for (EdgeId e : g.incident(v)) h.remove_edge(e);
            if (h.components().size() > 2) brute.push_back(v);
        }
        CHECK(cuts == brute);
    }
}

TEST_CASE("every block with a cut vertex has m <= 2n - 1") {
    aec::Rng rng(6);
    for (int t = 0; t < 300; ++t) {
        Graph g = random_connected(rng, 6, 40);
        BlockDecomposition bd = blocks(g);
        if (bd.cut_vertices.empty()) continue;
        for (std::size_t b = 0; b < bd.blocks.size(); ++b)
            if (!bd.cuts_of_block[b].empty()) CHECK(bd.blocks[b].size() + 1 <= 2 * bd.vertices_of(g, b).size());
    }
}

TEST_CASE("graphs with m <= 2n - 1 have a vertex of degree at most 3") {
    for (std::uint64_t s = 1; s <= 100; ++s) {
        Graph g = random_valid(10 + s, 2 * (10 + s) - 1, s);
        int low = 5;
        for (VertexId v = 0; v < g.num_vertices(); ++v) low = std::min(low, g.degree(v));
        CHECK(low <= 3);
    }
}

TEST_CASE("padding is empty when degrees are already right") {
    // x = 0 (neighbours 2, 3), y = 1 (neighbours 4, 5, 6); each neighbour gets
    // degree 4 from extra vertices.
    std::vector<std::pair<VertexId, VertexId>> edges{{0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}};
    VertexId next = 7;
    for (VertexId z : {2, 3, 4, 5, 6})
        for (int k = 0; k < 3; ++k) edges.emplace_back(z, next++);
    Graph g = make_graph(next, edges);
    PaddingRecord rec = pad_for_extension(g, 0, 1);
    CHECK(rec.empty());
    CHECK(rec.added_vertices.empty());
}

TEST_CASE("padding a vertex with a single leaf neighbour") {
    // x = 0 with leaf neighbour 1; y = 2 isolated. x gains one pendant, y three,
    // and then the leaf and those four pendants are raised to degree 4.
    Graph g = from(3, {{0, 1}});
    PaddingRecord rec = pad_for_extension(g, 0, 2);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(2) == 3);
    CHECK(rec.added_edges.size() == 1 + 3 + 3 * 5);
    for (VertexId c : {0u, 2u})
        for (EdgeId e : g.incident(c)) CHECK(g.degree(g.other(e, c)) == 4);
}

TEST_CASE("padding a four-cycle minus one edge") {
    // Path x=0 - 1 - 2 - y=3. By hand: x +1, y +2, then 1 and 2 need +2 each
    // and the three fresh pendants of x and y need +3 each: 16 new edges.
    Graph g = from(4, {{0, 1}, {1, 2}, {2, 3}});
    const Graph before = g;
    PaddingRecord rec = pad_for_extension(g, 0, 3);
    CHECK(rec.added_edges.size() == 16);
    CHECK(rec.added_vertices.size() == 16);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(3) == 3);
    for (VertexId c : {0u, 3u})
        for (EdgeId e : g.incident(c)) CHECK(g.degree(g.other(e, c)) == 4);
    strip_padding(g, rec);
    CHECK(g == before);
}

TEST_CASE("padding rejects high degrees") {
    Graph g = from(5, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(kind_of([&] { pad_for_extension(g, 0, 4); }) == ErrorKind::PreconditionViolated);
    Graph h = from(6, {{0, 1}, {2, 1}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(kind_of([&] { pad_for_extension(h, 0, 2); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("padding adds pendant trees and strips back to the same graph") {
    aec::Rng rng(9);
    for (int t = 0; t < 300; ++t) {
        Graph g = testing::random_graph(10, 16, rng);
        VertexId x = static_cast<VertexId>(rng.below(10)), y = static_cast<VertexId>(rng.below(10));
        if (x == y || g.adjacent(x, y) || g.degree(x) > 2 || g.degree(y) > 3) continue;
        const Graph before = g;
        PaddingRecord rec = pad_for_extension(g, x, y);
        CHECK(rec.added_edges.size() == rec.added_vertices.size());
        for (EdgeId e : rec.added_edges) {
            // Each new edge hangs a new vertex off an older one.
            const Edge& ed = g.edge(e);
            CHECK(std::max(ed.u, ed.v) >= before.num_vertices());
        }
        for (VertexId v : rec.added_vertices) {
            bool first_step = g.adjacent(v, x) || g.adjacent(v, y);
            CHECK(g.degree(v) == (first_step ? 4 : 1));
        }
        CHECK(g.degree(x) == 2);
        CHECK(g.degree(y) == 3);
        strip_padding(g, rec);
        CHECK(g == before);
    }
}

TEST_CASE("enumerated small graphs, one per isomorphism class") {
    // Counts from the graph atlas, filtered to connected, max degree 4, m <= 2n-1.
    const std::size_t expected[] = {0, 1, 1, 2, 6, 20, 77};
    for (std::size_t n = 1; n <= 6; ++n) {
        auto graphs = testing::connected_graphs(n);
        CHECK(graphs.size() == expected[n]);
        for (const Graph& g : graphs) {
            CHECK(g.is_connected());
            CHECK(g.max_degree() <= 4);
            CHECK(g.num_edges() + 1 <= 2 * n);
        }
    }
}
