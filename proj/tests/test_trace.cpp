#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "aec/driver.hpp"
#include "aec/error.hpp"
#include "aec/generators.hpp"
#include "aec/trace.hpp"

using namespace aec;

namespace {

std::string text_of(const Trace& t) {
    std::ostringstream os;
    t.write(os);
    return os.str();
}

Trace parse(const std::string& text) {
    std::istringstream in(text);
    return Trace::read(in);
}

std::vector<Color> colors_of(const Coloring& c) {
    std::vector<Color> out(c.graph().edge_slots(), kNoColor);
    for (EdgeId e : c.graph().edge_ids()) out[e] = c.color(e);
    return out;
}

Trace traced_run(const Graph& g, bool seven, std::uint64_t pendant_seed, Coloring* out = nullptr) {
    Trace t;
    DriverOptions opts;
    opts.trace = &t;
    opts.pendant_seed = pendant_seed;
    Coloring c = seven ? color_graph_7(g, opts) : color_connected_6(g, opts);
    if (out) *out = c;
    return t;
}

}  // namespace

TEST_CASE("a small trace reads and writes back unchanged") {
    const std::string text =
        "palette 6\n"
        "BLOCK 0 0 1 2\n"
        "ASSIGN 0 1 # first\n"
        "ASSIGN 1 2\n"
        "ASSIGN 2 3\n"
        "PERMUTE 0 1 2 3 4 5 6\n"
        "MERGE\n";
    Trace t = parse(text);
    REQUIRE(t.records.size() == 6);
    CHECK(t.records[2].tag.empty());
    CHECK(t.records[1].tag == "first");
    CHECK(parse(text_of(t)) == t);
    ReplayReport r = replay(cycle_graph(3), t);
    CHECK(r.ok);
    CHECK(r.colors == std::vector<Color>{1, 2, 3});
}

TEST_CASE("malformed trace lines") {
    auto parse_kind = [](const std::string& text) {
        try {
            parse(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InternalError;
    };
    CHECK(parse_kind("BLOCK 0 0\nMERGE\n") == ErrorKind::Parse);
    CHECK(parse_kind("palette 6\nFROB 1\n") == ErrorKind::Parse);
    CHECK(parse_kind("palette 6\nASSIGN 0\n") == ErrorKind::Parse);
    CHECK(parse_kind("palette 6\nRECOLOR 0 1 x\n") == ErrorKind::Parse);
    CHECK(parse_kind("palette 6\nPERMUTE 0 1 2 3\n") == ErrorKind::Parse);
}

TEST_CASE("replaying a driver trace reproduces the coloring") {
    for (std::uint64_t s = 1; s <= 30; ++s) {
        std::size_t n = 10 + 7 * s;
        Graph g = random_valid(n, 2 * n - 1 - s % 5, s);
        Coloring c(g, 6);
        Trace t = traced_run(g, false, s % 3 == 0 ? s : 0, &c);
        Trace back = parse(text_of(t));
        CHECK(back == t);
        ReplayReport r = replay(g, back);
        INFO(r.message);
        CHECK(r.ok);
        CHECK(r.colors == colors_of(c));
    }
}

TEST_CASE("seven-color traces replay too") {
    for (std::uint64_t s = 1; s <= 10; ++s) {
        Graph g = random_4regular(10 + 3 * s, s);
        Coloring c(g, 7);
        Trace t = traced_run(g, true, 0, &c);
        CHECK(t.palette == 7);
        ReplayReport r = replay(g, parse(text_of(t)));
        INFO(r.message);
        CHECK(r.ok);
        CHECK(r.colors == colors_of(c));
    }
}

TEST_CASE("tampered traces are rejected") {
    Graph g = random_valid(40, 79, 9);
    Trace t = traced_run(g, false, 0);
    REQUIRE(replay(g, t).ok);

    SUBCASE("an assignment copies an adjacent edge's color") {
        Trace bad = t;
        std::vector<std::size_t> seen;  // Assign records of the current block
        bool changed = false;
        for (std::size_t k = 0; k < bad.records.size() && !changed; ++k) {
            auto& r = bad.records[k];
            if (r.kind == TraceRecord::Kind::Block) seen.clear();
            if (r.kind != TraceRecord::Kind::Assign || r.edge >= g.edge_slots()) continue;
            VertexId u = g.edge(r.edge).u, v = g.edge(r.edge).v;
            for (std::size_t q : seen) {
                VertexId a = g.edge(bad.records[q].edge).u, b = g.edge(bad.records[q].edge).v;
                if (a == u || a == v || b == u || b == v) {
                    r.color = bad.records[q].color;
                    changed = true;
                    break;
                }
            }
            seen.push_back(k);
        }
        REQUIRE(changed);
        CHECK_FALSE(replay(g, bad).ok);
    }
    SUBCASE("a record dropped") {
        Trace bad = t;
        for (std::size_t k = 0; k < bad.records.size(); ++k)
            if (bad.records[k].kind == TraceRecord::Kind::Assign && bad.records[k].edge < g.edge_slots()) {
                bad.records.erase(bad.records.begin() + static_cast<std::ptrdiff_t>(k));
                break;
            }
        CHECK_FALSE(replay(g, bad).ok);
    }
    SUBCASE("no merge") {
        Trace bad = t;
        bad.records.pop_back();
        ReplayReport r = replay(g, bad);
        CHECK_FALSE(r.ok);
        CHECK_FALSE(r.message.empty());
    }
    SUBCASE("a color outside the palette") {
        Trace bad = t;
        bad.palette = 6;
        for (auto& r : bad.records)
            if (r.kind == TraceRecord::Kind::Assign) {
                r.color = 9;
                break;
            }
        CHECK_FALSE(replay(g, bad).ok);
    }
}
