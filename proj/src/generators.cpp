#include "aec/generators.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <string>

#include "aec/error.hpp"
#include "aec/rng.hpp"

namespace aec {

namespace {

[[noreturn]] void infeasible(const std::string& what) { throw Error(ErrorKind::InfeasibleSpec, what); }

// Simple graph under construction with a degree cap and a pool of vertices
// that still have room.
class Builder {
public:
    Builder(std::size_t n, int cap) : cap_(cap), adj_(n), pos_(n, kNone) {}

    std::size_t n() const { return adj_.size(); }
    std::size_t m() const { return edges_.size(); }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(VertexId u, VertexId v) const {
        return std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end();
    }
    const std::vector<VertexId>& open() const { return open_; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    void make_open(VertexId v) {
        if (pos_[v] == kNone && degree(v) < cap_) {
            pos_[v] = static_cast<VertexId>(open_.size());
            open_.push_back(v);
        }
    }

    void add(VertexId u, VertexId v) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        edges_.emplace_back(std::min(u, v), std::max(u, v));
        refresh(u);
        refresh(v);
    }

    void remove(VertexId u, VertexId v) {
        auto drop = [](std::vector<VertexId>& a, VertexId w) { a.erase(std::find(a.begin(), a.end(), w)); };
        drop(adj_[u], v);
        drop(adj_[v], u);
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        edges_.erase(std::find(edges_.begin(), edges_.end(), key));
        make_open(u);
        make_open(v);
    }

    void replace_edge(std::size_t idx, VertexId u, VertexId v) {
        auto [p, q] = edges_[idx];
        auto drop = [](std::vector<VertexId>& a, VertexId w) { a.erase(std::find(a.begin(), a.end(), w)); };
        drop(adj_[p], q);
        drop(adj_[q], p);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        edges_[idx] = {std::min(u, v), std::max(u, v)};
    }

    bool connected() const {
        if (n() == 0) return true;
        std::vector<bool> seen(n(), false);
        std::vector<VertexId> stack{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : adj_[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n();
    }

    Graph build() const { return make_graph(n(), edges_); }

private:
    void refresh(VertexId v) {
        if (degree(v) >= cap_ && pos_[v] != kNone) {
            VertexId last = open_.back();
            open_[pos_[v]] = last;
            pos_[last] = pos_[v];
            open_.pop_back();
            pos_[v] = kNone;
        }
    }

    int cap_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<VertexId> pos_;
    std::vector<VertexId> open_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
};

// Random spanning tree: vertices arrive in random order and each attaches
// to a random earlier vertex with room.
void random_tree(Builder& b, Rng& rng) {
    std::vector<VertexId> order(b.n());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    b.make_open(order[0]);
    for (std::size_t i = 1; i < order.size(); ++i) {
        const auto& open = b.open();
        VertexId u = open[rng.below(open.size())];
        b.add(u, order[i]);
        b.make_open(order[i]);
    }
}

// Adds one edge between vertices with room; when every such pair is already
// adjacent, trades an edge pq for up and vq, which keeps connectivity.
bool add_random_edge(Builder& b, Rng& rng, int cap) {
    const auto& open = b.open();
    for (int attempt = 0; attempt < 64 && open.size() >= 2; ++attempt) {
        VertexId u = open[rng.below(open.size())], v = open[rng.below(open.size())];
        if (u != v && !b.adjacent(u, v)) {
            b.add(u, v);
            return true;
        }
    }
    std::vector<std::pair<VertexId, VertexId>> pairs;
    if (open.size() <= 4096) {
        for (std::size_t i = 0; i < open.size(); ++i)
            for (std::size_t j = i + 1; j < open.size(); ++j)
                if (!b.adjacent(open[i], open[j])) pairs.emplace_back(open[i], open[j]);
        if (!pairs.empty()) {
            auto [u, v] = pairs[rng.below(pairs.size())];
            b.add(u, v);
            return true;
        }
    }
    std::vector<std::pair<VertexId, VertexId>> ends;
    for (std::size_t i = 0; i < open.size(); ++i) {
        VertexId u = open[i];
        if (b.degree(u) <= cap - 2) ends.emplace_back(u, u);
        for (std::size_t j = i + 1; j < open.size(); ++j) ends.emplace_back(u, open[j]);
    }
    const std::size_t m = b.m();
    if (m == 0) return false;
    std::size_t start = rng.below(m);
    for (auto [u, v] : ends)
        for (std::size_t k = 0; k < m; ++k) {
            auto [p, q] = b.edges()[(start + k) % m];
            for (int flip = 0; flip < 2; ++flip, std::swap(p, q)) {
                if (p == u || p == v || q == u || q == v) continue;
                if (b.adjacent(u, p) || b.adjacent(v, q)) continue;
                b.remove(p, q);
                b.add(u, p);
                b.add(v, q);
                return true;
            }
        }
    return false;
}

std::size_t pairs_of(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace

Graph cycle_graph(std::size_t n) {
    if (n < 3) infeasible("cycle needs n >= 3");
    std::vector<std::pair<VertexId, VertexId>> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return make_graph(n, e);
}

Graph complete_graph(std::size_t n) {
    if (n < 1 || n > 5) infeasible("complete graph needs 1 <= n <= 5");
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return make_graph(n, e);
}

Graph complete_minus_edge(std::size_t n) {
    if (n < 2 || n > 5) infeasible("complete_minus_edge needs 2 <= n <= 5");
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) e.emplace_back(i, j);
    e.pop_back();
    return make_graph(n, e);
}

Graph circulant(std::size_t n, const std::vector<std::size_t>& offsets) {
    if (n < 3) infeasible("circulant needs n >= 3");
    std::vector<std::size_t> offs = offsets;
    std::sort(offs.begin(), offs.end());
    offs.erase(std::unique(offs.begin(), offs.end()), offs.end());
    int degree = 0;
    for (std::size_t o : offs) {
        if (o < 1 || 2 * o > n) infeasible("circulant offset must lie in 1..n/2");
        degree += 2 * o == n ? 1 : 2;
    }
    if (degree > kMaxDegree) infeasible("circulant degree " + std::to_string(degree) + " exceeds 4");
    std::vector<std::pair<VertexId, VertexId>> e;
    for (std::size_t o : offs)
        for (std::size_t i = 0; i < n; ++i) {
            if (2 * o == n && i >= o) continue;
            e.emplace_back(i, (i + o) % n);
        }
    return make_graph(n, e);
}

Graph random_valid(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n < 1) infeasible("random_valid needs n >= 1");
    if (m + 1 < n || m + 1 > 2 * n || m > pairs_of(n))
        infeasible("random_valid(" + std::to_string(n) + "," + std::to_string(m) + ") has no connected graph");
    Rng rng(seed);
    Builder b(n, kMaxDegree);
    random_tree(b, rng);
    while (b.m() < m)
        if (!add_random_edge(b, rng, kMaxDegree)) infeasible("random_valid could not place another edge");
    return b.build();
}

Graph random_4regular(std::size_t n, std::uint64_t seed) {
    if (n < 5) infeasible("random_4regular needs n >= 5");
    Rng rng(seed);
    Builder b(n, kMaxDegree);
    for (std::size_t o : {1, 2})
        for (std::size_t i = 0; i < n; ++i) b.add(i, (i + o) % n);
    auto shuffle_round = [&](std::size_t switches) {
        for (std::size_t s = 0; s < switches; ++s) {
            std::size_t e1 = rng.below(b.m()), e2 = rng.below(b.m());
            auto [a, c] = b.edges()[e1];
            auto [p, q] = b.edges()[e2];
            if (rng.below(2)) std::swap(p, q);
            if (a == p || a == q || c == p || c == q) continue;
            if (b.adjacent(a, p) || b.adjacent(c, q)) continue;
            b.replace_edge(e1, a, p);
            b.replace_edge(e2, c, q);
        }
    };
    shuffle_round(10 * b.m());
    for (int round = 0; !b.connected(); ++round) {
        if (round >= 1000) infeasible("random_4regular could not reach a connected graph");
        shuffle_round(b.m());
    }
    return b.build();
}

Graph subcubic_random(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n < 1) infeasible("subcubic_random needs n >= 1");
    if (2 * m > 3 * n || m > pairs_of(n)) infeasible("subcubic_random: too many edges");
    Rng rng(seed);
    Builder b(n, 3);
    if (m + 1 >= n) {
        random_tree(b, rng);
    } else {
        for (VertexId v = 0; v < n; ++v) b.make_open(v);
    }
    while (b.m() < m)
        if (!add_random_edge(b, rng, 3)) infeasible("subcubic_random could not place another edge");
    return b.build();
}

GeneratorSpec GeneratorSpec::parse(std::string_view text, std::uint64_t default_seed) {
    auto bad = [&](const std::string& why) { infeasible("generator \"" + std::string(text) + "\": " + why); };
    GeneratorSpec s;
    s.seed = default_seed;
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    auto open = t.find('(');
    if (open == std::string::npos) {
        s.family = t;
    } else {
        if (t.back() != ')') bad("missing ')'");
        s.family = t.substr(0, open);
        std::string body = t.substr(open + 1, t.size() - open - 2);
        std::size_t at = 0;
        while (at < body.size()) {
            std::size_t comma = body.find(',', at);
            std::string num = body.substr(at, comma == std::string::npos ? std::string::npos : comma - at);
            if (num.empty() || !std::all_of(num.begin(), num.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
                bad("parameter \"" + num + "\" is not a non-negative integer");
            s.params.push_back(std::stoull(num));
            if (comma == std::string::npos) break;
            at = comma + 1;
            if (at == body.size()) bad("trailing comma");
        }
    }
    auto arity = [&](std::size_t lo, std::size_t hi) {
        if (s.params.size() < lo || s.params.size() > hi) bad("wrong number of parameters");
    };
    if (s.family == "cycle" || s.family == "complete" || s.family == "complete_minus_edge") {
        arity(1, 1);
    } else if (s.family == "circulant") {
        arity(2, 5);
    } else if (s.family == "random_valid" || s.family == "subcubic_random") {
        arity(2, 3);
        if (s.params.size() == 3) s.seed = s.params[2], s.params.pop_back();
    } else if (s.family == "random_4regular") {
        arity(1, 2);
        if (s.params.size() == 2) s.seed = s.params[1], s.params.pop_back();
    } else {
        bad("unknown family");
    }
    return s;
}

std::string GeneratorSpec::str() const {
    std::string out = family + "(";
    for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
    if (family.rfind("random", 0) == 0 || family == "subcubic_random")
        out += (params.empty() ? "" : ",") + std::to_string(seed);
    return out + ")";
}

Graph generate(const GeneratorSpec& s) {
    auto p = [&](std::size_t i) { return static_cast<std::size_t>(s.params.at(i)); };
    if (s.family == "cycle") return cycle_graph(p(0));
    if (s.family == "complete") return complete_graph(p(0));
    if (s.family == "complete_minus_edge") return complete_minus_edge(p(0));
    if (s.family == "circulant") {
        std::vector<std::size_t> offs(s.params.begin() + 1, s.params.end());
        return circulant(p(0), offs);
    }
    if (s.family == "random_valid") return random_valid(p(0), p(1), s.seed);
    if (s.family == "random_4regular") return random_4regular(p(0), s.seed);
    if (s.family == "subcubic_random") return subcubic_random(p(0), p(1), s.seed);
    infeasible("unknown family " + s.family);
}

}  // namespace aec
