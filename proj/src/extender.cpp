#include "aec/extender.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "aec/error.hpp"
#include "aec/paths.hpp"

namespace aec {

std::string_view to_string(CaseId id) {
    switch (id) {
        case CaseId::One: return "1";
        case CaseId::TwoOne: return "2.1";
        case CaseId::TwoTwo: return "2.2";
        case CaseId::Three: return "3";
    }
    return "?";
}

void ExtensionContext::swap_labels(int p, int q) {
    std::swap(color_of_label[p], color_of_label[q]);
    label_of_color[color_of_label[p]] = p;
    label_of_color[color_of_label[q]] = q;
}

namespace {

std::vector<VertexId> neighbours(const Graph& g, VertexId v) {
    std::vector<VertexId> out;
    for (EdgeId e : g.incident(v)) out.push_back(g.other(e, v));
    return out;
}

VertexId neighbour_with(const Coloring& c, VertexId v, Color k) {
    EdgeId e = c.edge_with_color(v, k);
    return e == kNone ? kNone : c.graph().other(e, v);
}

// Neighbours of v other than `skip`, ordered by the rank of the label of
// their edge color.
template <class Rank>
std::array<VertexId, 3> others_by_rank(const Coloring& c, const ExtensionContext& ctx, VertexId v, VertexId skip,
                                       Rank rank) {
    std::vector<VertexId> ns;
    for (VertexId z : neighbours(c.graph(), v))
        if (z != skip) ns.push_back(z);
    std::sort(ns.begin(), ns.end(), [&](VertexId p, VertexId q) {
        return rank(ctx.label(c.color(v, p))) < rank(ctx.label(c.color(v, q)));
    });
    std::array<VertexId, 3> out{kNone, kNone, kNone};
    for (std::size_t i = 0; i < ns.size() && i < 3; ++i) out[i] = ns[i];
    return out;
}

}  // namespace

ExtensionContext normalize(const Coloring& c, VertexId x, VertexId y) {
    const Graph& g = c.graph();
    auto fail = [&](const std::string& what) {
        throw Error(ErrorKind::PreconditionViolated,
                    "extension at (" + std::to_string(x) + "," + std::to_string(y) + "): " + what);
    };
    if (!g.has_vertex(x) || !g.has_vertex(y) || x == y) fail("bad endpoints");
    if (g.adjacent(x, y)) fail("xy present");
    if (g.degree(x) != 2 || g.degree(y) != 3) fail("degrees must be 2 and 3");
    for (VertexId v : {x, y})
        for (EdgeId e : g.incident(v)) {
            if (!c.is_colored(e)) fail("uncolored edge at an endpoint");
            if (g.degree(g.other(e, v)) != kMaxDegree) fail("neighbour not of degree 4");
        }

    ExtensionContext ctx;
    ctx.x = x;
    ctx.y = y;
    ColorSet fx = c.at(x), fy = c.at(y);
    ColorSet common = fx & fy;
    ColorSet cands = ColorSet::palette(kBasePalette) - (fx | fy);
    std::vector<Color> order;  // live colors listed by label 1..6

    auto xs = neighbours(g, x);
    std::sort(xs.begin(), xs.end(), [&](VertexId p, VertexId q) { return c.color(x, p) < c.color(x, q); });
    ctx.a = xs[0];
    ctx.b = xs[1];

    if (common.empty()) {
        ctx.case_id = CaseId::One;
        for (Color k = 1; k <= kBasePalette; ++k) order.push_back(k);
    } else if (common.size() == 2) {
        ColorSet full = fx | fy;
        bool disjoint = ((c.s_set(x, ctx.a) | c.s_set(x, ctx.b)) & full).empty();
        std::vector<Color> rest;
        if (disjoint) {
            ctx.case_id = CaseId::TwoOne;
            ColorClassification cls = classify(c, x, y);
            if (!cls.any(CandidateClass::Tag::Valid) && !cls.any(CandidateClass::Tag::Strong)) {
                // Orient a towards the side where at least two weak colors are active.
                int at_a = 0;
                for (const auto& cc : cls.classes) at_a += cc.active_at == ctx.a;
                if (at_a < 2) std::swap(ctx.a, ctx.b);
                for (const auto& cc : cls.classes)
                    if (cc.active_at == ctx.a && rest.size() < 2) rest.push_back(cc.color);
                for (Color k : cands.to_vector())
                    if (std::find(rest.begin(), rest.end(), k) == rest.end()) rest.push_back(k);
            } else {
                rest = cands.to_vector();
            }
        } else {
            ctx.case_id = CaseId::TwoTwo;
            if ((c.s_set(x, ctx.a) & full).empty()) std::swap(ctx.a, ctx.b);
            ColorSet free = cands - c.s_set(x, ctx.a);
            Color five = free.first();
            if (five == kNoColor) fail("no candidate outside S(x,a)");
            ColorSet others = cands.without(five);
            auto ov = others.to_vector();
            rest = {ov[0], five, ov[1]};
        }
        order = {c.color(x, ctx.a), c.color(x, ctx.b), (fy - fx).first()};
        order.insert(order.end(), rest.begin(), rest.end());
    } else {
        ctx.case_id = CaseId::Three;
        Color one = common.first();
        if (c.color(x, ctx.a) != one) std::swap(ctx.a, ctx.b);
        auto ys = neighbours(g, y);
        std::sort(ys.begin(), ys.end(), [&](VertexId p, VertexId q) { return c.color(y, p) < c.color(y, q); });
        std::vector<Color> ycols;
        for (VertexId z : ys)
            if (c.color(y, z) != one) ycols.push_back(c.color(y, z));
        order = {one, c.color(x, ctx.b), ycols[0], ycols[1]};
        for (Color k : cands.to_vector()) order.push_back(k);
    }

    if (order.size() != 6) throw Error(ErrorKind::InternalError, "normalize: palette accounting");
    for (int lab = 1; lab <= 6; ++lab) {
        ctx.color_of_label[lab] = order[lab - 1];
        ctx.label_of_color[order[lab - 1]] = lab;
    }

    if (ctx.case_id == CaseId::One) {
        auto ys = neighbours(g, y);
        std::sort(ys.begin(), ys.end(), [&](VertexId p, VertexId q) { return c.color(y, p) < c.color(y, q); });
        ctx.a_y = ys[0];
        ctx.b_y = ys[1];
        ctx.d_y = ys[2];
    } else if (ctx.case_id == CaseId::Three) {
        ctx.a_y = neighbour_with(c, y, ctx.color(1));
        ctx.b_y = neighbour_with(c, y, ctx.color(3));
        ctx.d_y = neighbour_with(c, y, ctx.color(4));
    } else {
        ctx.a_y = neighbour_with(c, y, ctx.color(1));
        ctx.b_y = neighbour_with(c, y, ctx.color(2));
        ctx.d_y = neighbour_with(c, y, ctx.color(3));
    }

    auto by_label = [](int lab) { return lab; };
    if (ctx.case_id == CaseId::TwoOne) {
        ctx.k = others_by_rank(c, ctx, ctx.a, x, [](int lab) { return lab == 4 ? 0 : lab == 5 ? 1 : 2 + lab; });
        ctx.l = others_by_rank(c, ctx, ctx.b, x, by_label);
    } else if (ctx.case_id == CaseId::Three) {
        ctx.k = others_by_rank(c, ctx, ctx.a, x,
                               [](int lab) { return lab == 5 ? 0 : lab == 6 ? 1 : lab == 2 ? 2 : 3 + lab; });
        ctx.l = others_by_rank(c, ctx, ctx.b, x,
                               [](int lab) { return lab == 3 ? 0 : lab == 4 ? 1 : lab == 1 ? 2 : 3 + lab; });
    } else {
        ctx.k = others_by_rank(c, ctx, ctx.a, x, by_label);
        ctx.l = others_by_rank(c, ctx, ctx.b, x, by_label);
    }
    return ctx;
}

namespace {

class Engine {
public:
    Engine(Coloring& c, VertexId x, VertexId y, const ExtendOptions& opts)
        : c_(c), g_(c.graph()), x_(x), y_(y), opts_(opts) {}

    ExtensionOutcome run() {
        ExtensionContext ctx = normalize(c_, x_, y_);
        out_.initial_case = ctx.case_id;
        switch (ctx.case_id) {
            case CaseId::One:
                if (!finish("case1")) fail("case1", "the only candidate is not valid");
                break;
            case CaseId::TwoOne:
            case CaseId::TwoTwo: case2(ctx); break;
            case CaseId::Three:
                if (case3(ctx)) {
                    out_.reentered = true;
                    ExtensionContext again = normalize(c_, x_, y_);
                    if (again.case_id != CaseId::TwoOne && again.case_id != CaseId::TwoTwo)
                        fail("case3/reenter", "recoloring did not produce two shared colors");
                    case2(again);
                }
                break;
        }
        return std::move(out_);
    }

private:
    Coloring& c_;
    const Graph& g_;
    VertexId x_, y_;
    ExtendOptions opts_;
    ExtensionOutcome out_;

    [[noreturn]] void fail(std::string_view step, const std::string& what) {
        throw Error(ErrorKind::InternalError, std::string(step) + " at (" + std::to_string(x_) + "," +
                                                  std::to_string(y_) + "): " + what);
    }

    Color col(VertexId u, VertexId v) const { return c_.color(u, v); }
    ColorSet S(VertexId u, VertexId v) const { return c_.s_set(u, v); }
    bool critical(Color alpha, Color beta, VertexId p, VertexId q) const {
        return exists_critical_path(c_, alpha, beta, p, q);
    }

    // Takes the smallest valid candidate of xy, if any.
    bool finish(std::string_view step) {
        ColorSet cands = ColorSet::palette(kBasePalette) - (c_.at(x_) | c_.at(y_));
        for (Color beta : cands.to_vector()) {
            if (is_valid(c_, x_, y_, beta)) {
                out_.color = beta;
                out_.steps.emplace_back(step);
                return true;
            }
        }
        return false;
    }

    void record(Move m, std::string_view step, bool transient) {
        out_.moves.push_back(std::move(m));
        out_.steps.emplace_back(step);
        if (static_cast<int>(out_.moves.size()) > opts_.move_budget) fail(step, "move budget exceeded");
        if (opts_.debug && !transient) {
            Verdict v = verify_acyclic(c_);
            if (!v.ok()) fail(step, "coloring not acyclic after the move: " + v.describe(g_));
        }
    }

    void recolor_edge(VertexId u, VertexId v, Color k, std::string_view step, bool transient = false) {
        EdgeId e = g_.find_edge(u, v);
        if (e == kNone) fail(step, "edge missing");
        try {
            record(recolor(c_, e, k, std::string(step)), step, transient);
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::InternalError) throw;
            fail(step, err.what());
        }
    }

    void exchange(ConfigurationA cfg, std::string_view step) {
        std::optional<Coloring> before;
        if (opts_.debug) before = c_;
        Move m;
        try {
            m = color_exchange(c_, cfg, std::string(step));
        } catch (const Error& err) {
            fail(step, err.what());
        }
        if (before) check_paths_broken(*before, cfg, step);
        record(std::move(m), step, false);
    }

    // Every critical path between x and one of y, a, b that ran through the
    // pivot and met the swapped colors must be gone.
    void check_paths_broken(const Coloring& before, const ConfigurationA& cfg, std::string_view step) {
        Color ci = before.color(cfg.u, cfg.i), cj = before.color(cfg.u, cfg.j);
        std::vector<VertexId> ends{y_};
        for (VertexId z : neighbours(g_, x_)) ends.push_back(z);
        for (VertexId q : ends) {
            if (q == cfg.i || q == cfg.j || x_ == cfg.i || x_ == cfg.j) continue;
            EdgeId xq = g_.find_edge(x_, q);
            for (Color alpha = 1; alpha <= kBasePalette; ++alpha)
                for (Color beta = 1; beta <= kBasePalette; ++beta) {
                    if (alpha == beta) continue;
                    if (alpha != ci && alpha != cj && beta != ci && beta != cj) continue;
                    if (xq != kNone && (before.color(xq) == alpha || before.color(xq) == beta)) continue;
                    auto p = maximal_path(before, alpha, beta, x_, alpha);
                    if (!p || p->end() != q || p->last_color != alpha || !p->contains(cfg.u)) continue;
                    if (!breaks_critical_path_check(before, c_, alpha, beta, x_, q, cfg.u, cfg.i, cfg.j))
                        fail(step, "critical path survived the exchange: " + p->str());
                }
        }
    }

    void case2(ExtensionContext& ctx) {
        if (finish("case2/initial")) return;
        if (ctx.case_id == CaseId::TwoOne)
            case21(ctx);
        else
            case22(ctx);
    }

    void case21(ExtensionContext& ctx) {
        const VertexId x = x_, a = ctx.a, b = ctx.b;
        ColorClassification cls = classify(c_, x_, y_);
        if (cls.any(CandidateClass::Tag::Strong)) {
            exchange({x, a, b, {}, {}}, "case2.1/strong:swap-x");
            if (finish("case2.1/strong:swap-x")) return;
            fail("case2.1/strong:swap-x", "strong color not valid after swapping xa and xb");
        }
        exchange({x, a, b, {}, {}}, "case2.1/swap-x");
        if (finish("case2.1/swap-x")) return;
        recolor_edge(x, a, ctx.color(3), "case2.1/recolor-xa");
        if (finish("case2.1/recolor-xa")) return;
        exchange({a, ctx.k[0], ctx.k[1], {ctx.k[2]}, {x}}, "case2.1/swap-a");
        if (finish("case2.1/swap-a")) return;
        fail("case2.1/swap-a", "no valid color after the exchange at a");
    }

    void case22(ExtensionContext& ctx) {
        const VertexId x = x_, a = ctx.a, b = ctx.b;
        ColorClassification cls = classify(c_, x_, y_);
        auto tag_of = [&](Color k) { return cls.find(k)->tag; };
        if (cls.find(ctx.color(5)) && tag_of(ctx.color(5)) == CandidateClass::Tag::Strong)
            fail("case2.2/classify", "color outside S(x,a) is strong");

        Color lo = std::min(ctx.color(4), ctx.color(6)), hi = std::max(ctx.color(4), ctx.color(6));
        Color strong = kNoColor, inactive = kNoColor;
        for (Color k : {lo, hi}) {
            const CandidateClass* cc = cls.find(k);
            if (!cc) continue;
            if (cc->tag == CandidateClass::Tag::Strong && strong == kNoColor) strong = k;
            if (cc->tag == CandidateClass::Tag::Weak && cc->active_at != b && inactive == kNoColor) inactive = k;
        }
        if (strong != kNoColor) {
            if (strong != ctx.color(4)) ctx.swap_labels(4, 6);
            recolor_edge(x, a, ctx.color(5), "case2.2/strong:recolor-xa");
            if (finish("case2.2/strong:recolor-xa")) return;
            recolor_edge(x, b, ctx.color(1), "case2.2/strong:recolor-xb");
            if (finish("case2.2/strong:recolor-xb")) return;
            fail("case2.2/strong:recolor-xb", "strong color not valid after two recolorings");
        }
        if (inactive != kNoColor) {
            if (inactive != ctx.color(6)) ctx.swap_labels(4, 6);
            recolor_edge(x, a, ctx.color(5), "case2.2/inactive:recolor-xa");
            if (finish("case2.2/inactive:recolor-xa")) return;
            fail("case2.2/inactive:recolor-xa", "color inactive at b not valid after recoloring xa");
        }
        recolor_edge(x, b, ctx.color(3), "case2.2/recolor-xb");
        if (finish("case2.2/recolor-xb")) return;
        exchange({y_, ctx.b_y, ctx.d_y, {ctx.a_y}, {}}, "case2.2/swap-y");
        if (finish("case2.2/swap-y")) return;
        fail("case2.2/swap-y", "no valid color after the exchange at y");
    }

    void swap_34(ExtensionContext& ctx) {
        ctx.swap_labels(3, 4);
        std::swap(ctx.b_y, ctx.d_y);
    }

    // Returns true when xy now shares two colors and case 2 must take over.
    bool case3(ExtensionContext& ctx) {
        const VertexId x = x_, a = ctx.a, b = ctx.b;
        if (finish("case3/initial")) return false;

        ColorSet missing = ColorSet{ctx.color(3), ctx.color(4)} - S(x, b);
        if (!missing.empty()) {
            if (missing.first() == ctx.color(3)) swap_34(ctx);
            if (!critical(ctx.color(1), ctx.color(4), x, b)) {
                recolor_edge(x, b, ctx.color(4), "case3/xb-misses:recolor-xb");
                return true;
            }
            Color gamma = (ColorSet{ctx.color(3), ctx.color(5), ctx.color(6)} - S(x, b)).first();
            if (gamma == kNoColor) fail("case3/xb-misses", "no free color for xb");
            recolor_edge(x, b, gamma, "case3/xb-misses:recolor-xb-free");
            if (gamma == ctx.color(3)) return true;
            if (finish("case3/xb-misses:recolor-xb-free")) return false;
            fail("case3/xb-misses:recolor-xb-free", "no valid color after recoloring xb");
        }

        if (!S(x, b).contains(ctx.color(1))) {
            ColorSet other = S(x, a) - ColorSet{ctx.color(5), ctx.color(6)};
            Color beta = (ColorSet{ctx.color(3), ctx.color(4)} - other).first();
            if (!S(x, a).contains(ctx.color(2))) {
                exchange({x, a, b, {}, {}}, "case3/xb-lacks-shared:swap-x");
                recolor_edge(x, a, beta, "case3/xb-lacks-shared:recolor-xa");
            } else {
                // xb keeps its color one move longer, so this state may hold a cycle.
                recolor_edge(x, a, beta, "case3/xb-lacks-shared:recolor-xa", true);
                recolor_edge(x, b, ctx.color(1), "case3/xb-lacks-shared:recolor-xb");
            }
            return true;
        }

        auto shared = maximal_path(c_, ctx.color(1), ctx.color(2), x, ctx.color(1));
        if (!(shared && shared->end() == y_ && shared->last_color == ctx.color(1))) {
            recolor_edge(x, b, ctx.color(5), "case3/no-shared-path:recolor-xb");
            if (finish("case3/no-shared-path:recolor-xb")) return false;
            fail("case3/no-shared-path:recolor-xb", "no valid color after recoloring xb");
        }

        Color lo = std::min(ctx.color(3), ctx.color(4)), hi = std::max(ctx.color(3), ctx.color(4));
        for (Color gamma : {lo, hi}) {
            if (critical(ctx.color(2), gamma, x, a)) continue;
            if (gamma != ctx.color(3)) swap_34(ctx);
            recolor_edge(x, a, ctx.color(3), "case3/no-path-via-a:recolor-xa");
            if (finish("case3/no-path-via-a:recolor-xa")) return false;
            recolor_edge(x, b, ctx.color(5), "case3/no-path-via-a:recolor-xb");
            if (finish("case3/no-path-via-a:recolor-xb")) return false;
            exchange({y_, ctx.a_y, ctx.b_y, {ctx.d_y}, {}}, "case3/no-path-via-a:swap-y");
            if (finish("case3/no-path-via-a:swap-y")) return false;
            fail("case3/no-path-via-a:swap-y", "no valid color after the exchange at y");
        }

        Color lo5 = std::min(ctx.color(5), ctx.color(6)), hi5 = std::max(ctx.color(5), ctx.color(6));
        for (Color alpha : {lo, hi})
            for (Color beta : {lo5, hi5}) {
                auto p = maximal_path(c_, alpha, beta, b, alpha);
                if (p && p->end() == a && p->last_color == beta) continue;
                if (alpha != ctx.color(3)) swap_34(ctx);
                if (beta != ctx.color(5)) ctx.swap_labels(5, 6);
                recolor_edge(x, b, ctx.color(5), "case3/open-b-a-path:recolor-xb");
                recolor_edge(x, a, ctx.color(3), "case3/open-b-a-path:recolor-xa");
                if (finish("case3/open-b-a-path:recolor-xa")) return false;
                fail("case3/open-b-a-path:recolor-xa", "no valid color after the two recolorings");
            }

        VertexId l3 = neighbour_with(c_, b, ctx.color(3));
        VertexId l4 = neighbour_with(c_, b, ctx.color(4));
        VertexId l1 = neighbour_with(c_, b, ctx.color(1));
        if (l1 == kNone || l3 == kNone || l4 == kNone) fail("case3/final", "S(x,b) is not {1,3,4}");
        recolor_edge(x, b, ctx.color(5), "case3/final:recolor-xb");
        if (finish("case3/final:recolor-xb")) return false;
        exchange({b, l3, l4, {l1}, {x}}, "case3/final:swap-b");
        if (finish("case3/final:swap-b")) return false;
        recolor_edge(x, a, ctx.color(3), "case3/final:recolor-xa");
        if (finish("case3/final:recolor-xa")) return false;
        fail("case3/final:recolor-xa", "no valid color at the end");
    }
};

}  // namespace

ExtensionOutcome extend(Coloring& c, VertexId x, VertexId y, const ExtendOptions& opts) {
    return Engine(c, x, y, opts).run();
}

}  // namespace aec
