#include "naive.hpp"

#include <algorithm>

namespace aec::testing {

namespace {

struct CycleSearch {
    const Coloring& c;
    const Graph& g;
    VertexId start = 0;
    std::vector<bool> on_path;

    // Extends a path from start; colors holds the (at most two) colors seen.
    bool dfs(VertexId v, std::size_t length, Color c1, Color c2) {
        for (EdgeId e : g.incident(v)) {
            Color k = c.color(e);
            if (k == kNoColor) continue;
            Color n1 = c1, n2 = c2;
            if (k != n1 && k != n2) {
                if (n1 == kNoColor)
                    n1 = k;
                else if (n2 == kNoColor)
                    n2 = k;
                else
                    continue;
            }
            VertexId w = g.other(e, v);
            if (w == start && length >= 2) return true;
            if (w <= start || on_path[w]) continue;
            on_path[w] = true;
            bool found = dfs(w, length + 1, n1, n2);
            on_path[w] = false;
            if (found) return true;
        }
        return false;
    }
};

bool alt_dfs(const Coloring& c, Color alpha, Color beta, VertexId v, VertexId target, Color want,
             std::vector<bool>& seen, std::vector<VertexId>& path) {
    const Graph& g = c.graph();
    for (EdgeId e : g.incident(v)) {
        if (c.color(e) != want) continue;
        VertexId w = g.other(e, v);
        if (seen[w]) continue;
        path.push_back(w);
        if (w == target && want == alpha) return true;
        seen[w] = true;
        bool found = alt_dfs(c, alpha, beta, w, target, want == alpha ? beta : alpha, seen, path);
        seen[w] = false;
        if (found) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

bool naive_proper(const Coloring& c) {
    const Graph& g = c.graph();
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        std::vector<Color> seen;
        for (EdgeId e : g.incident(v)) {
            Color k = c.color(e);
            if (k == kNoColor) continue;
            if (k > c.palette()) return false;
            if (std::find(seen.begin(), seen.end(), k) != seen.end()) return false;
            seen.push_back(k);
        }
    }
    return true;
}

bool naive_has_two_colored_cycle(const Coloring& c) {
    const Graph& g = c.graph();
    CycleSearch s{c, g, 0, std::vector<bool>(g.num_vertices(), false)};
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        s.start = v;
        s.on_path[v] = true;
        bool found = s.dfs(v, 0, kNoColor, kNoColor);
        s.on_path[v] = false;
        if (found) return true;
    }
    return false;
}

std::vector<VertexId> naive_critical_path(const Coloring& c, Color alpha, Color beta, VertexId a, VertexId b) {
    std::vector<bool> seen(c.graph().num_vertices(), false);
    seen[a] = true;
    std::vector<VertexId> path{a};
    if (!alt_dfs(c, alpha, beta, a, b, alpha, seen, path)) path.clear();
    return path;
}

Graph random_graph(std::size_t n, std::size_t m, Rng& rng) {
    Graph g(n);
    if (n < 2) return g;
    for (std::size_t tries = 0; g.num_edges() < m && tries < 50 * (m + 1); ++tries) {
        auto u = static_cast<VertexId>(rng.below(n)), v = static_cast<VertexId>(rng.below(n));
        if (u == v || g.adjacent(u, v) || g.degree(u) >= kMaxDegree || g.degree(v) >= kMaxDegree) continue;
        g.add_edge(u, v);
    }
    return g;
}

void random_acyclic_coloring(Coloring& c, Rng& rng, double density) {
    const Graph& g = c.graph();
    std::vector<EdgeId> order = g.edge_ids();
    rng.shuffle(order);
    for (EdgeId e : order) {
        if (c.is_colored(e)) continue;
        if (density < 1.0 && static_cast<double>(rng.below(1000)) >= density * 1000) continue;
        std::vector<Color> cands = c.candidates(e).to_vector();
        rng.shuffle(cands);
        for (Color k : cands) {
            c.set_raw(e, k);
            if (!naive_has_two_colored_cycle(c)) break;
            c.set_raw(e, kNoColor);
        }
    }
}

bool total_and_proper(const Coloring& c) {
    const Graph& g = c.graph();
    for (EdgeId e : g.edge_ids())
        if (c.color(e) == kNoColor || c.color(e) > c.palette()) return false;
    return naive_proper(c);
}

}  // namespace aec::testing
