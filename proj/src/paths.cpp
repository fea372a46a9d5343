#include "aec/paths.hpp"

#include <algorithm>
#include <sstream>

#include "aec/error.hpp"

namespace aec {

namespace {

thread_local std::uint64_t g_steps = 0;

enum class WalkEnd { NoStart, Open, BackToStart };

// Follows the (alpha, beta) alternation from v through its `start` edge.
WalkEnd walk(const Coloring& c, Color alpha, Color beta, VertexId v, Color start, BichromaticPath* out) {
    const Graph& g = c.graph();
    EdgeId e = c.edge_with_color(v, start);
    if (e == kNone) return WalkEnd::NoStart;
    if (out) {
        *out = BichromaticPath{alpha, beta, {v}, {}, start, start};
    }
    VertexId cur = v;
    Color want = start;
    const std::size_t limit = g.edge_slots() + 1;
    for (std::size_t steps = 0;; ++steps) {
        if (steps > limit) throw Error(ErrorKind::InternalError, "path walk does not terminate; coloring improper?");
        ++g_steps;
        VertexId w = g.other(e, cur);
        if (out) out->edges.push_back(e);
        if (w == v) return WalkEnd::BackToStart;
        if (out) {
            out->vertices.push_back(w);
            out->last_color = want;
        }
        want = want == alpha ? beta : alpha;
        EdgeId next = c.edge_with_color(w, want);
        if (next == kNone) return WalkEnd::Open;
        e = next;
        cur = w;
    }
}

void check_pair(Color alpha, Color beta) {
    if (alpha == beta || alpha == kNoColor || beta == kNoColor)
        throw Error(ErrorKind::InvalidPair, "(" + std::to_string(alpha) + "," + std::to_string(beta) + ")");
}

}  // namespace

std::uint64_t path_steps() { return g_steps; }
void reset_path_steps() { g_steps = 0; }

bool BichromaticPath::contains(VertexId v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::string BichromaticPath::str() const {
    std::ostringstream os;
    os << int(alpha) << ',' << int(beta) << ':';
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        os << ' ' << vertices[i];
        if (i < edges.size()) os << " -" << edges[i] << '-';
    }
    return os.str();
}

std::optional<BichromaticPath> maximal_path(const Coloring& c, Color alpha, Color beta, VertexId v, Color start) {
    check_pair(alpha, beta);
    if (start != alpha && start != beta) throw Error(ErrorKind::InvalidPair, "start color not in the pair");
    BichromaticPath p;
    switch (walk(c, alpha, beta, v, start, &p)) {
        case WalkEnd::NoStart: return std::nullopt;
        case WalkEnd::BackToStart:
            throw Error(ErrorKind::OnCycle, "vertex " + std::to_string(v) + " lies on a (" + std::to_string(alpha) +
                                                "," + std::to_string(beta) + ") cycle");
        case WalkEnd::Open: break;
    }
    return p;
}

bool exists_critical_path(const Coloring& c, Color alpha, Color beta, VertexId a, VertexId b) {
    auto p = maximal_path(c, alpha, beta, a, alpha);
    return p && p->end() == b && p->last_color == alpha;
}

bool on_bichromatic_cycle(const Coloring& c, Color alpha, Color beta, VertexId v) {
    check_pair(alpha, beta);
    return walk(c, alpha, beta, v, alpha, nullptr) == WalkEnd::BackToStart;
}

bool is_valid(const Coloring& c, VertexId x, VertexId y, Color beta) {
    ColorSet fx = c.at(x), fy = c.at(y);
    if (beta == kNoColor || beta > c.palette() || fx.contains(beta) || fy.contains(beta))
        throw Error(ErrorKind::NotACandidate, "color " + std::to_string(beta) + " for (" + std::to_string(x) + "," +
                                                  std::to_string(y) + ")");
    for (Color alpha : (fx & fy).to_vector())
        if (exists_critical_path(c, alpha, beta, x, y)) return false;
    return true;
}

const CandidateClass* ColorClassification::find(Color k) const {
    for (const auto& cc : classes)
        if (cc.color == k) return &cc;
    return nullptr;
}

bool ColorClassification::any(CandidateClass::Tag t) const {
    return std::any_of(classes.begin(), classes.end(), [t](const CandidateClass& cc) { return cc.tag == t; });
}

ColorClassification classify(const Coloring& c, VertexId x, VertexId y) {
    ColorClassification out{x, y, {}};
    const Graph& g = c.graph();
    ColorSet fx = c.at(x), fy = c.at(y);
    ColorSet cands = ColorSet::palette(kBasePalette) - (fx | fy);
    for (Color beta : cands.to_vector()) {
        CandidateClass cc;
        cc.color = beta;
        for (Color alpha : (fx & fy).to_vector()) {
            auto p = maximal_path(c, alpha, beta, x, alpha);
            if (p && p->end() == y && p->last_color == alpha) {
                cc.blockers.push_back(alpha);
                if (!cc.path) cc.path = std::move(p);
            }
        }
        if (cc.blockers.empty()) {
            cc.tag = CandidateClass::Tag::Valid;
        } else if (cc.blockers.size() == 1) {
            cc.tag = CandidateClass::Tag::Weak;
            cc.active_at = cc.path->vertices[1];
        } else {
            cc.tag = CandidateClass::Tag::Strong;
            cc.path.reset();
        }
        for (EdgeId e : g.incident(x)) {
            if (!c.is_colored(e)) continue;
            VertexId a = g.other(e, x);
            if (a != cc.active_at && c.s_set(x, a).contains(beta)) cc.passive_at.push_back(a);
        }
        out.classes.push_back(std::move(cc));
    }
    return out;
}

}  // namespace aec
