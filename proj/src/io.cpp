#include "aec/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "aec/error.hpp"

namespace aec {

namespace {

// Splits the next meaningful line into fields; false at end of input.
bool next_fields(std::istream& is, std::size_t& lineno, std::vector<std::string>& fields) {
    std::string line;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        fields.clear();
        for (std::string f; ls >> f;) fields.push_back(f);
        if (!fields.empty()) return true;
    }
    return false;
}

std::uint64_t to_uint(const std::string& s, std::size_t lineno) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": \"" + s + "\" is not a non-negative integer");
    return v;
}

[[noreturn]] void parse_error(std::size_t lineno, const std::string& why) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + why);
}

}  // namespace

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
    return in;
}

Graph read_graph(std::istream& is) {
    std::size_t lineno = 0;
    std::vector<std::string> f;
    if (!next_fields(is, lineno, f)) throw Error(ErrorKind::Parse, "empty graph file");

    bool dimacs = f[0] == "p" || f[0] == "c";
    if (dimacs) {
        while (f[0] == "c")
            if (!next_fields(is, lineno, f)) throw Error(ErrorKind::Parse, "DIMACS file without a 'p' line");
        if (f[0] != "p" || f.size() != 4) parse_error(lineno, "expected \"p edge n m\"");
        f.erase(f.begin(), f.begin() + 2);
    }
    if (f.size() != 2) parse_error(lineno, "expected \"n m\"");
    std::uint64_t n = to_uint(f[0], lineno), m = to_uint(f[1], lineno);
    if (n >= kNone) parse_error(lineno, "too many vertices");

    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(m);
    while (next_fields(is, lineno, f)) {
        if (dimacs) {
            if (f[0] == "c") continue;
            if (f[0] != "e") parse_error(lineno, "expected \"e u v\"");
            f.erase(f.begin());
        }
        if (f.size() != 2) parse_error(lineno, "expected two vertex ids");
        std::uint64_t u = to_uint(f[0], lineno), v = to_uint(f[1], lineno);
        if (dimacs) {
            if (u == 0 || v == 0) parse_error(lineno, "DIMACS vertices start at 1");
            --u;
            --v;
        }
        if (u >= n || v >= n) parse_error(lineno, "vertex out of range");
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    if (edges.size() != m)
        throw Error(ErrorKind::Parse,
                    "header promises " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return make_graph(n, edges);
}

Graph read_graph_file(const std::string& path) {
    auto in = open_input(path);
    return read_graph(in);
}

void write_graph(std::ostream& os, const Graph& g) {
    os << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edge_list()) os << u << ' ' << v << '\n';
}

void write_coloring(std::ostream& os, const Coloring& c) {
    const Graph& g = c.graph();
    for (EdgeId e : g.edge_ids()) {
        if (!c.is_colored(e)) continue;
        const Edge& ed = g.edge(e);
        os << std::min(ed.u, ed.v) << ' ' << std::max(ed.u, ed.v) << ' ' << int(c.color(e)) << '\n';
    }
    os << "palette " << c.palette() << '\n';
}

Coloring read_coloring(std::istream& is, const Graph& g) {
    std::size_t lineno = 0;
    std::vector<std::string> f;
    int palette = 0;
    std::vector<std::pair<EdgeId, Color>> entries;
    std::vector<bool> seen(g.edge_slots(), false);
    while (next_fields(is, lineno, f)) {
        if (f[0] == "palette") {
            if (f.size() != 2) parse_error(lineno, "expected \"palette k\"");
            if (palette != 0) parse_error(lineno, "second palette line");
            auto k = to_uint(f[1], lineno);
            if (k != 6 && k != 7) parse_error(lineno, "palette must be 6 or 7");
            palette = static_cast<int>(k);
            continue;
        }
        if (f.size() != 3) parse_error(lineno, "expected \"u v color\"");
        auto u = to_uint(f[0], lineno), v = to_uint(f[1], lineno), col = to_uint(f[2], lineno);
        if (u >= g.num_vertices() || v >= g.num_vertices()) parse_error(lineno, "vertex out of range");
        EdgeId e = g.find_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
        if (e == kNone) parse_error(lineno, "no edge " + f[0] + "-" + f[1] + " in the graph");
        if (seen[e]) parse_error(lineno, "edge listed twice");
        seen[e] = true;
        if (col == 0 || col > kMaxPalette) parse_error(lineno, "color out of range");
        entries.emplace_back(e, static_cast<Color>(col));
    }
    if (palette == 0) throw Error(ErrorKind::Parse, "coloring has no \"palette k\" line");
    Coloring c(g, palette);
    for (auto [e, k] : entries) c.set_raw(e, k);
    return c;
}

Coloring read_coloring_file(const std::string& path, const Graph& g) {
    auto in = open_input(path);
    return read_coloring(in, g);
}

}  // namespace aec
