#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <map>
#include <string>

#include "adversarial.hpp"
#include "aec/error.hpp"
#include "aec/extender.hpp"
#include "aec/paths.hpp"
#include "aec/rng.hpp"
#include "instance.hpp"
#include "naive.hpp"

using namespace aec;
using testing::Instance;

namespace {

constexpr VertexId X = 0, Y = 1, A = 2, B = 3, A1 = 4, B1 = 5, D1 = 6;

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InternalError;
}

// x = 0 with xa, xb colored fx; y = 1 with ya', yb', yd' colored fy; then
// padded so every neighbour has degree 4.
std::unique_ptr<Instance> padded(std::array<Color, 2> fx, std::array<Color, 3> fy) {
    auto t = std::make_unique<Instance>(std::initializer_list<testing::ColoredEdge>{
        {X, A, fx[0]}, {X, B, fx[1]}, {Y, A1, fy[0]}, {Y, B1, fy[1]}, {Y, D1, fy[2]}});
    t->pad(X, Y);
    return t;
}

// After extend, assigning the returned color keeps the coloring acyclic.
bool extension_checks_out(Graph& g, Coloring& c, VertexId x, VertexId y, const ExtensionOutcome& out) {
    if (!c.candidates(x, y).contains(out.color)) return false;
    EdgeId e = g.add_edge(x, y);
    c.set_raw(e, out.color);
    bool ok = testing::naive_acyclic(c);
    c.set_raw(e, kNoColor);
    g.remove_edge(e);
    g.truncate(g.num_vertices(), e);
    return ok;
}

}  // namespace

TEST_CASE("no shared colors: case 1") {
    auto t = padded({3, 6}, {1, 2, 5});
    ExtensionContext ctx = normalize(t->c, X, Y);
    CHECK(ctx.case_id == CaseId::One);
    ExtensionOutcome out = extend(t->c, X, Y);
    CHECK(out.initial_case == CaseId::One);
    CHECK(out.moves.empty());
    CHECK(out.color == 4);
    CHECK(extension_checks_out(t->g, t->c, X, Y, out));
}

TEST_CASE("two shared colors: case 2 with the identity relabeling") {
    auto t = padded({1, 2}, {1, 2, 3});
    ExtensionContext ctx = normalize(t->c, X, Y);
    CHECK((ctx.case_id == CaseId::TwoOne || ctx.case_id == CaseId::TwoTwo));
    for (int label = 1; label <= 6; ++label) CHECK(ctx.color(label) == label);
    CHECK(ctx.a == A);
    CHECK(ctx.b == B);
    CHECK(ctx.d_y == D1);
}

TEST_CASE("one shared color: case 3 relabels it to 1") {
    auto t = padded({2, 6}, {2, 3, 4});
    ExtensionContext ctx = normalize(t->c, X, Y);
    CHECK(ctx.case_id == CaseId::Three);
    CHECK(ctx.label(2) == 1);
    CHECK(ctx.color(1) == 2);
    CHECK(ctx.color(2) == 6);
    CHECK(ctx.color(3) == 3);
    CHECK(ctx.color(4) == 4);
    CHECK(ColorSet{ctx.color(5), ctx.color(6)} == ColorSet{1, 5});
    // Roles: xa and ya' carry the shared color, xb label 2, yb' and yd' labels 3, 4.
    CHECK(ctx.a == A);
    CHECK(ctx.b == B);
    CHECK(ctx.a_y == A1);
    CHECK(ctx.b_y == B1);
    CHECK(ctx.d_y == D1);
    for (int label = 1; label <= 6; ++label) CHECK(ctx.label(ctx.color(label)) == label);
    // k and l are the other neighbours of a and b.
    for (VertexId k : ctx.k) CHECK(t->g.adjacent(A, k));
    for (VertexId l : ctx.l) CHECK(t->g.adjacent(B, l));
}

TEST_CASE("normalize checks degrees and colors") {
    Instance t{{X, A, 1}, {Y, A1, 2}, {Y, B1, 3}, {Y, D1, 4}};
    CHECK(kind_of([&] { normalize(t.c, X, Y); }) == ErrorKind::PreconditionViolated);
    auto p = padded({1, 2}, {1, 2, 3});
    p->c.unassign(p->edge(X, A));
    CHECK(kind_of([&] { normalize(p->c, X, Y); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("strong candidate in case 2.1: one exchange makes it valid") {
    // (1,4) and (2,4) critical paths through a and b; 5 and 6 weak at a.
    Instance t{{X, A, 1},  {X, B, 2},  {A, A1, 4}, {A, 7, 5},  {7, 8, 1},  {8, A1, 5}, {A, 9, 6},
               {9, 10, 1}, {10, A1, 6}, {A1, Y, 1}, {B, B1, 4}, {B1, Y, 2}, {D1, Y, 3}, {B, 11, 5},
               {B, 12, 6}};
    t.pad(X, Y);
    REQUIRE(testing::naive_acyclic(t.c));
    ColorClassification cl = classify(t.c, X, Y);
    REQUIRE(cl.find(4)->tag == CandidateClass::Tag::Strong);
    REQUIRE(cl.find(5)->tag == CandidateClass::Tag::Weak);
    REQUIRE(cl.find(6)->tag == CandidateClass::Tag::Weak);
    CHECK(normalize(t.c, X, Y).case_id == CaseId::TwoOne);

    ExtendOptions opts;
    opts.debug = true;
    ExtensionOutcome out = extend(t.c, X, Y, opts);
    CHECK(out.initial_case == CaseId::TwoOne);
    REQUIRE(out.moves.size() == 1);
    CHECK(out.moves[0].kind == Move::Kind::Exchange);
    CHECK(out.moves[0].u == X);
    CHECK(out.color == 4);
    CHECK(t.c.color(X, A) == 2);
    CHECK(t.c.color(X, B) == 1);
    CHECK(extension_checks_out(t.g, t.c, X, Y, out));
}

TEST_CASE("move budget overflow is an internal error") {
    Instance t{{X, A, 1},  {X, B, 2},  {A, A1, 4}, {A, 7, 5},  {7, 8, 1},  {8, A1, 5}, {A, 9, 6},
               {9, 10, 1}, {10, A1, 6}, {A1, Y, 1}, {B, B1, 4}, {B1, Y, 2}, {D1, Y, 3}, {B, 11, 5},
               {B, 12, 6}};
    t.pad(X, Y);
    ExtendOptions opts;
    opts.move_budget = 0;
    CHECK(kind_of([&] { extend(t.c, X, Y, opts); }) == ErrorKind::InternalError);
}

TEST_CASE("adversarial instances: every extension succeeds") {
    std::map<CaseId, int> cases;
    std::map<std::string, int> steps;
    int multi = 0, built = 0, failures = 0;
    for (std::uint64_t seed = 1; seed <= 2000; ++seed) {
        auto inst = testing::adversarial_instance(seed, 250);
        if (!inst) continue;
        ++built;
        Coloring& c = *inst->c;
        REQUIRE(verify_acyclic(c).ok());
        const Coloring start = c;
        ExtendOptions opts;
        opts.debug = true;
        try {
            ExtensionOutcome out = extend(c, inst->x, inst->y, opts);
            ++cases[out.initial_case];
            for (const auto& s : out.steps) ++steps[s];
            multi += out.moves.size() >= 2;
            CHECK(out.moves.size() <= 10);
            CHECK(extension_checks_out(inst->g, c, inst->x, inst->y, out));
            // The recorded moves take the start coloring to the final one.
            Coloring replayed = start;
            for (const Move& m : out.moves) {
                CHECK_FALSE(m.tag.empty());
                apply(replayed, m);
            }
            CHECK(replayed == c);
        } catch (const Error& e) {
            ++failures;
            INFO("seed " << seed << ": " << e.what());
            CHECK(false);
        }
    }
    CHECK(failures == 0);
    CHECK(built > 1500);
    CHECK(cases[CaseId::One] > 0);
    CHECK(cases[CaseId::TwoOne] > 0);
    CHECK(cases[CaseId::TwoTwo] > 0);
    CHECK(cases[CaseId::Three] > 0);
    CHECK(multi > 0);
    MESSAGE("cases 1/2.1/2.2/3: " << cases[CaseId::One] << "/" << cases[CaseId::TwoOne] << "/"
                                  << cases[CaseId::TwoTwo] << "/" << cases[CaseId::Three] << ", " << steps.size()
                                  << " distinct steps, " << multi << " with several moves");
}

TEST_CASE("renaming colors before extending still gives a valid color") {
    for (std::uint64_t seed = 400; seed < 500; ++seed) {
        auto inst = testing::adversarial_instance(seed, 100);
        if (!inst) continue;
        Coloring& c = *inst->c;
        aec::Rng rng(seed);
        std::vector<Color> perm{1, 2, 3, 4, 5, 6};
        rng.shuffle(perm);
        for (EdgeId e : c.graph().edge_ids()) c.set_raw(e, perm[c.color(e) - 1]);
        REQUIRE(verify_acyclic(c).ok());
        ExtendOptions opts;
        opts.debug = true;
        ExtensionOutcome out = extend(c, inst->x, inst->y, opts);
        CHECK(extension_checks_out(inst->g, c, inst->x, inst->y, out));
    }
}
