#include "aec/coloring.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "aec/error.hpp"

namespace aec {

std::vector<Color> ColorSet::to_vector() const {
    std::vector<Color> out;
    for (Color c = 1; c <= kMaxPalette; ++c)
        if (contains(c)) out.push_back(c);
    return out;
}

std::string ColorSet::str() const {
    std::string s = "{";
    bool first = true;
    for (Color c : to_vector()) {
        if (!first) s += ",";
        s += std::to_string(c);
        first = false;
    }
    return s + "}";
}

Coloring::Coloring(const Graph& g, int palette) : graph_(&g), palette_(palette), colors_(g.edge_slots(), kNoColor) {
    if (palette != 6 && palette != 7)
        throw Error(ErrorKind::PreconditionViolated, "palette must be 6 or 7, got " + std::to_string(palette));
}

Color Coloring::color(VertexId u, VertexId v) const {
    EdgeId e = graph_->find_edge(u, v);
    if (e == kNone) throw Error(ErrorKind::UnknownEdge, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    return color(e);
}

ColorSet Coloring::at(VertexId u) const {
    ColorSet s;
    for (EdgeId e : graph_->incident(u))
        if (Color k = color(e)) s.insert(k);
    return s;
}

ColorSet Coloring::s_set(VertexId a, VertexId b) const {
    Color k = color(a, b);
    if (k == kNoColor)
        throw Error(ErrorKind::PreconditionViolated,
                    "S(" + std::to_string(a) + "," + std::to_string(b) + ") needs a colored edge");
    return at(b).without(k);
}

ColorSet Coloring::candidates(VertexId u, VertexId v) const {
    ColorSet used;
    for (VertexId w : {u, v})
        for (EdgeId e : graph_->incident(w)) {
            if (graph_->other(e, w) == (w == u ? v : u)) continue;
            if (Color k = color(e)) used.insert(k);
        }
    return ColorSet::palette(palette_) - used;
}

ColorSet Coloring::candidates(EdgeId e) const {
    const auto& ed = graph_->edge(e);
    return candidates(ed.u, ed.v);
}

EdgeId Coloring::edge_with_color(VertexId u, Color k) const {
    for (EdgeId e : graph_->incident(u))
        if (color(e) == k) return e;
    return kNone;
}

void Coloring::assign(EdgeId e, Color k) {
    if (!graph_->has_edge(e)) throw Error(ErrorKind::UnknownEdge, "assign to edge " + std::to_string(e));
    if (is_colored(e)) throw Error(ErrorKind::AlreadyColored, "edge " + std::to_string(e));
    if (!candidates(e).contains(k))
        throw Error(ErrorKind::NotACandidate,
                    "color " + std::to_string(k) + " for edge " + std::to_string(e) + " (candidates " +
                        candidates(e).str() + ")");
    set_raw(e, k);
}

void Coloring::unassign(EdgeId e) { set_raw(e, kNoColor); }

void Coloring::set_raw(EdgeId e, Color k) {
    if (e >= colors_.size()) colors_.resize(std::max<std::size_t>(e + 1, graph_->edge_slots()), kNoColor);
    colors_[e] = k;
}

ColorSet Coloring::used_colors() const {
    ColorSet s;
    for (EdgeId e = 0; e < colors_.size(); ++e)
        if (colors_[e] != kNoColor && graph_->has_edge(e)) s.insert(colors_[e]);
    return s;
}

std::size_t Coloring::colored_count() const {
    std::size_t n = 0;
    for (EdgeId e = 0; e < colors_.size(); ++e)
        if (colors_[e] != kNoColor && graph_->has_edge(e)) ++n;
    return n;
}

bool Coloring::is_total() const { return colored_count() == graph_->num_edges(); }

bool Coloring::operator==(const Coloring& o) const {
    if (palette_ != o.palette_) return false;
    std::size_t n = std::max(colors_.size(), o.colors_.size());
    for (EdgeId e = 0; e < n; ++e)
        if (color(e) != o.color(e)) return false;
    return true;
}

std::optional<BichromaticCycle> find_bichromatic_cycle(const Coloring& c, Color alpha, Color beta) {
    if (alpha == beta) throw Error(ErrorKind::InvalidPair, "colors must differ");
    const Graph& g = c.graph();
    std::vector<char> seen(g.edge_slots(), 0);
    auto flip = [&](Color k) { return k == alpha ? beta : alpha; };

    for (EdgeId e0 = 0; e0 < g.edge_slots(); ++e0) {
        if (!g.has_edge(e0) || c.color(e0) != alpha || seen[e0]) continue;
        const VertexId start = g.edge(e0).u;
        BichromaticCycle cyc{alpha, beta, {start}, {}};
        EdgeId e = e0;
        VertexId v = start;
        Color want = alpha;
        bool closed = false;
        while (true) {
            seen[e] = 1;
            cyc.edges.push_back(e);
            VertexId w = g.other(e, v);
            want = flip(want);
            if (w == start) {
                closed = true;
                break;
            }
            cyc.vertices.push_back(w);
            EdgeId next = c.edge_with_color(w, want);
            if (next == kNone || seen[next]) break;
            e = next;
            v = w;
        }
        if (closed) return cyc;
        // Mark the other half of this path so it is not walked again.
        v = start;
        want = beta;
        for (EdgeId b = c.edge_with_color(v, want); b != kNone && !seen[b]; b = c.edge_with_color(v, want)) {
            seen[b] = 1;
            v = g.other(b, v);
            want = flip(want);
        }
    }
    return std::nullopt;
}

namespace {

// Palette or properness violation among the colored edges at v.
Verdict check_proper_at(const Coloring& c, VertexId v) {
    Verdict out;
    const Graph& g = c.graph();
    auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
        Color ki = c.color(inc[i]);
        if (ki == kNoColor) continue;
        if (ki > c.palette()) {
            out.kind = Verdict::Kind::OutOfPalette;
            out.edges = {inc[i]};
            out.alpha = ki;
            return out;
        }
        for (std::size_t j = i + 1; j < inc.size(); ++j)
            if (c.color(inc[j]) == ki) {
                out.kind = Verdict::Kind::Improper;
                out.edges = {inc[i], inc[j]};
                out.alpha = ki;
                return out;
            }
    }
    return out;
}

std::vector<std::pair<Color, Color>> color_pairs(int palette) {
    std::vector<std::pair<Color, Color>> pairs;
    for (Color a = 1; a <= palette; ++a)
        for (Color b = a + 1; b <= palette; ++b) pairs.emplace_back(a, b);
    return pairs;
}

Verdict from_cycle(const BichromaticCycle& cyc) {
    Verdict v;
    v.kind = Verdict::Kind::Cycle;
    v.edges = cyc.edges;
    v.cycle = cyc.vertices;
    v.alpha = cyc.alpha;
    v.beta = cyc.beta;
    return v;
}

}  // namespace

Verdict verify_acyclic_serial(const Coloring& c) {
    const Graph& g = c.graph();
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        Verdict p = check_proper_at(c, v);
        if (!p.ok()) return p;
    }
    for (auto [a, b] : color_pairs(c.palette()))
        if (auto cyc = find_bichromatic_cycle(c, a, b)) return from_cycle(*cyc);
    return {};
}

Verdict verify_acyclic(const Coloring& c) {
    const Graph& g = c.graph();
    const long n = static_cast<long>(g.num_vertices());
    long first_bad = n;
#pragma omp parallel for reduction(min : first_bad) schedule(static)
    for (long v = 0; v < n; ++v)
        if (!check_proper_at(c, static_cast<VertexId>(v)).ok()) first_bad = std::min(first_bad, v);
    if (first_bad < n) return check_proper_at(c, static_cast<VertexId>(first_bad));

    const auto pairs = color_pairs(c.palette());
    std::vector<std::optional<BichromaticCycle>> found(pairs.size());
    const long np = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < np; ++i) found[i] = find_bichromatic_cycle(c, pairs[i].first, pairs[i].second);
    for (const auto& f : found)
        if (f) return from_cycle(*f);
    return {};
}

std::string Verdict::describe(const Graph& g) const {
    std::ostringstream os;
    auto edge_str = [&](EdgeId e) {
        const auto& ed = g.edge(e);
        return std::to_string(ed.u) + "-" + std::to_string(ed.v);
    };
    switch (kind) {
        case Kind::Ok: os << "ok"; break;
        case Kind::OutOfPalette: os << "edge " << edge_str(edges[0]) << " has color " << int(alpha) << " outside the palette"; break;
        case Kind::Improper:
            os << "improper: edges " << edge_str(edges[0]) << " and " << edge_str(edges[1]) << " share color " << int(alpha);
            break;
        case Kind::Cycle:
            os << "bichromatic (" << int(alpha) << "," << int(beta) << ") cycle:";
            for (VertexId v : cycle) os << ' ' << v;
            break;
    }
    return os.str();
}

}  // namespace aec
