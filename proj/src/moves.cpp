#include "aec/moves.hpp"

#include <algorithm>
#include <string>

#include "aec/error.hpp"
#include "aec/paths.hpp"

namespace aec {

namespace {

std::string vstr(VertexId v) { return std::to_string(v); }

}  // namespace

Move recolor(Coloring& c, EdgeId e, Color gamma, std::string tag) {
    const Graph& g = c.graph();
    if (!g.has_edge(e)) throw Error(ErrorKind::UnknownEdge, "recolor of edge " + std::to_string(e));
    Color old = c.color(e);
    if (old == kNoColor) throw Error(ErrorKind::PreconditionViolated, "recolor of uncolored edge " + std::to_string(e));
    Move m;
    m.kind = Move::Kind::Recolor;
    m.edge = e;
    m.old_color = old;
    m.new_color = gamma;
    m.tag = std::move(tag);
    if (gamma == old) return m;
    if (!c.candidates(e).contains(gamma))
        throw Error(ErrorKind::NotACandidate, "recolor edge " + std::to_string(e) + " to " + std::to_string(gamma));
    c.set_raw(e, gamma);
    return m;
}

bool is_configuration_A(const Coloring& c, const ConfigurationA& cfg) {
    const Graph& g = c.graph();
    if (!g.has_vertex(cfg.u) || cfg.i == cfg.j) return false;
    EdgeId ei = g.find_edge(cfg.u, cfg.i);
    EdgeId ej = g.find_edge(cfg.u, cfg.j);
    if (ei == kNone || ej == kNone || !c.is_colored(ei) || !c.is_colored(ej)) return false;

    std::vector<VertexId> rest, parts;
    for (EdgeId e : g.incident(cfg.u)) {
        VertexId z = g.other(e, cfg.u);
        if (z != cfg.i && z != cfg.j) rest.push_back(z);
    }
    parts = cfg.safe;
    parts.insert(parts.end(), cfg.check.begin(), cfg.check.end());
    std::sort(rest.begin(), rest.end());
    std::sort(parts.begin(), parts.end());
    if (rest != parts) return false;

    ColorSet si = c.s_set(cfg.u, cfg.i);
    ColorSet sj = c.s_set(cfg.u, cfg.j);
    Color ci = c.color(ei), cj = c.color(ej);
    if (sj.contains(ci) || si.contains(cj)) return false;
    for (VertexId z : cfg.safe) {
        Color cz = c.color(cfg.u, z);
        if (si.contains(cz) || sj.contains(cz)) return false;
    }
    return true;
}

Move color_exchange(Coloring& c, const ConfigurationA& cfg, std::string tag) {
    if (!is_configuration_A(c, cfg))
        throw Error(ErrorKind::NotConfigurationA,
                    "(" + vstr(cfg.u) + "," + vstr(cfg.i) + "," + vstr(cfg.j) + ") " + tag);
    const Graph& g = c.graph();
    Move m;
    m.kind = Move::Kind::Exchange;
    m.u = cfg.u;
    m.i = cfg.i;
    m.j = cfg.j;
    m.edge_i = g.find_edge(cfg.u, cfg.i);
    m.edge_j = g.find_edge(cfg.u, cfg.j);
    m.color_i = c.color(m.edge_i);
    m.color_j = c.color(m.edge_j);
    m.tag = std::move(tag);
    c.set_raw(m.edge_i, m.color_j);
    c.set_raw(m.edge_j, m.color_i);

    for (VertexId h : cfg.check) {
        Color ch = c.color(cfg.u, h);
        for (Color alpha : {m.color_i, m.color_j}) {
            if (ch == kNoColor || ch == alpha) continue;
            if (on_bichromatic_cycle(c, alpha, ch, h)) {
                undo(c, m);
                throw Error(ErrorKind::CycleCreated, "exchange at " + vstr(cfg.u) + " closes a (" +
                                                         std::to_string(alpha) + "," + std::to_string(ch) +
                                                         ") cycle through " + vstr(h));
            }
        }
    }
    return m;
}

void apply(Coloring& c, const Move& m) {
    switch (m.kind) {
        case Move::Kind::Assign: c.assign(m.edge, m.new_color); break;
        case Move::Kind::Recolor:
            if (c.color(m.edge) != m.old_color)
                throw Error(ErrorKind::PreconditionViolated, "recolor expects edge " + std::to_string(m.edge) +
                                                                 " to have color " + std::to_string(m.old_color));
            recolor(c, m.edge, m.new_color, m.tag);
            break;
        case Move::Kind::Exchange: {
            const Graph& g = c.graph();
            EdgeId ei = g.find_edge(m.u, m.i), ej = g.find_edge(m.u, m.j);
            if (ei == kNone || ej == kNone) throw Error(ErrorKind::UnknownEdge, "exchange edges missing");
            Color ci = c.color(ei), cj = c.color(ej);
            if (ci == kNoColor || cj == kNoColor || c.s_set(m.u, m.j).contains(ci) || c.s_set(m.u, m.i).contains(cj))
                throw Error(ErrorKind::NotACandidate, "exchange at " + vstr(m.u) + " would be improper");
            c.set_raw(ei, cj);
            c.set_raw(ej, ci);
            break;
        }
    }
}

void undo(Coloring& c, const Move& m) {
    switch (m.kind) {
        case Move::Kind::Assign: c.unassign(m.edge); break;
        case Move::Kind::Recolor: c.set_raw(m.edge, m.old_color); break;
        case Move::Kind::Exchange: {
            // An exchange is its own inverse.
            const Graph& g = c.graph();
            EdgeId ei = m.edge_i != kNone ? m.edge_i : g.find_edge(m.u, m.i);
            EdgeId ej = m.edge_j != kNone ? m.edge_j : g.find_edge(m.u, m.j);
            Color ci = c.color(ei);
            c.set_raw(ei, c.color(ej));
            c.set_raw(ej, ci);
            break;
        }
    }
}

bool breaks_critical_path_check(const Coloring& before, const Coloring& after, Color alpha, Color beta, VertexId a,
                                VertexId b, VertexId u, VertexId i, VertexId j) {
    Color ci = before.color(u, i), cj = before.color(u, j);
    if (alpha != ci && alpha != cj && beta != ci && beta != cj)
        throw Error(ErrorKind::PreconditionViolated, "exchanged colors do not meet the path's pair");
    if (i == a || i == b || j == a || j == b)
        throw Error(ErrorKind::PreconditionViolated, "exchange endpoints coincide with the path ends");
    auto p = maximal_path(before, alpha, beta, a, alpha);
    if (!p || p->end() != b || p->last_color != alpha || !p->contains(u))
        throw Error(ErrorKind::PreconditionViolated, "no critical path through the exchange vertex");
    return !exists_critical_path(after, alpha, beta, a, b);
}

}  // namespace aec
