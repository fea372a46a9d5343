#include "aec/oracle.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "aec/error.hpp"

namespace aec {

namespace {

// Edges in breadth-first order from a vertex of maximum degree, restarting
// in every component.
std::vector<EdgeId> search_order(const Graph& g) {
    std::vector<EdgeId> order;
    std::vector<bool> seen_v(g.num_vertices(), false), seen_e(g.edge_slots(), false);
    std::vector<VertexId> roots(g.num_vertices());
    for (VertexId v = 0; v < roots.size(); ++v) roots[v] = v;
    std::stable_sort(roots.begin(), roots.end(), [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
    for (VertexId r : roots) {
        if (seen_v[r]) continue;
        std::vector<VertexId> queue{r};
        seen_v[r] = true;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            VertexId v = queue[qi];
            for (EdgeId e : g.incident(v)) {
                if (!seen_e[e]) {
                    seen_e[e] = true;
                    order.push_back(e);
                }
                VertexId w = g.other(e, v);
                if (!seen_v[w]) {
                    seen_v[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    return order;
}

class Search {
public:
    Search(const Graph& g, int k) : g_(g), k_(k), order_(search_order(g)) {
        colors_.assign(g.edge_slots(), kNoColor);
        at_.assign(g.num_vertices(), {});
        for (auto& a : at_) a.fill(kNone);
    }

    bool run() { return step(0, 0); }
    const std::vector<Color>& colors() const { return colors_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    // Whether coloring uv with k closes a (j,k) cycle for some j: the walk
    // leaving v by its j edge and alternating j,k reaches u.
    bool closes_cycle(VertexId u, VertexId v, Color k) const {
        for (Color j = 1; j <= k_; ++j) {
            if (j == k || at_[u][j] == kNone || at_[v][j] == kNone) continue;
            VertexId cur = v;
            Color want = j;
            while (true) {
                EdgeId e = at_[cur][want];
                if (e == kNone) break;
                cur = g_.other(e, cur);
                if (cur == u) {
                    if (want == j) return true;
                    break;
                }
                want = want == j ? k : j;
            }
        }
        return false;
    }

    bool step(std::size_t pos, int used) {
        if (pos == order_.size()) return true;
        EdgeId e = order_[pos];
        VertexId u = g_.edge(e).u, v = g_.edge(e).v;
        int top = std::min(k_, used + 1);
        for (int c = 1; c <= top; ++c) {
            Color k = static_cast<Color>(c);
            if (at_[u][k] != kNone || at_[v][k] != kNone) continue;
            ++nodes_;
            if (closes_cycle(u, v, k)) continue;
            colors_[e] = k;
            at_[u][k] = e;
            at_[v][k] = e;
            if (step(pos + 1, std::max(used, c))) return true;
            colors_[e] = kNoColor;
            at_[u][k] = kNone;
            at_[v][k] = kNone;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<EdgeId> order_;
    std::vector<Color> colors_;
    std::vector<std::array<EdgeId, kMaxPalette + 1>> at_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<std::vector<Color>> is_k_feasible(const Graph& g, int k, std::uint64_t* nodes, std::size_t max_edges) {
    if (g.num_edges() > max_edges)
        throw Error(ErrorKind::TooLarge,
                    std::to_string(g.num_edges()) + " edges exceed the oracle limit of " + std::to_string(max_edges));
    if (k < 0 || k > kMaxPalette) throw Error(ErrorKind::PreconditionViolated, "k must lie in 0..7");
    Search s(g, k);
    bool ok = s.run();
    if (nodes) *nodes += s.nodes();
    if (!ok) return std::nullopt;
    return s.colors();
}

OracleResult exact_index(const Graph& g, int k_max, std::size_t max_edges) {
    OracleResult r;
    k_max = std::min(k_max, kMaxPalette);
    for (int k = g.num_edges() == 0 ? 0 : g.max_degree(); k <= k_max; ++k) {
        auto w = is_k_feasible(g, k, &r.nodes, max_edges);
        if (w) {
            r.feasible = true;
            r.exact_index = k;
            r.witness = std::move(*w);
            return r;
        }
    }
    return r;
}

}  // namespace aec
