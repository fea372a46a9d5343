// aec: color, verify, solve exactly, generate, replay and benchmark.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "aec/driver.hpp"
#include "aec/error.hpp"
#include "aec/generators.hpp"
#include "aec/io.hpp"
#include "aec/oracle.hpp"
#include "aec/trace.hpp"

namespace {

enum Exit : int {
    kOk = 0,
    kCheckFailed = 1,
    kPrecondition = 2,
    kInternal = 3,
    kUsage = 64,
    kIo = 66,
};

int exit_code(const aec::Error& e) {
    using aec::ErrorKind;
    switch (e.kind()) {
        case ErrorKind::InternalError:
        case ErrorKind::CycleCreated:
        case ErrorKind::NotConfigurationA: return kInternal;
        case ErrorKind::Io:
        case ErrorKind::Parse: return kIo;
        case ErrorKind::InfeasibleSpec: return kUsage;
        default: return kPrecondition;
    }
}

void write_to(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw aec::Error(aec::ErrorKind::Io, "cannot write " + path);
    out << text;
    if (!out) throw aec::Error(aec::ErrorKind::Io, "write to " + path + " failed");
}

std::vector<std::string> split_list(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& item : raw) {
        std::stringstream ss(item);
        for (std::string part; std::getline(ss, part, ',');)
            if (!part.empty()) out.push_back(part);
    }
    return out;
}

struct BenchRow {
    std::string family;
    std::size_t n = 0, m = 0;
    int colors = 0;
    std::size_t moves = 0;
    std::uint64_t nodes = 0;
    double ms = 0;
    std::string error;
};

BenchRow bench_one(const std::string& family, std::size_t n, std::uint64_t seed) {
    BenchRow row;
    row.family = family;
    aec::GeneratorSpec spec;
    spec.family = family;
    spec.seed = seed;
    bool seven = false;
    if (family == "random_valid")
        spec.params = {n, 2 * n - 1};
    else if (family == "subcubic_random")
        spec.params = {n, 3 * n / 2};
    else if (family == "random_4regular")
        spec.params = {n}, seven = true;
    else if (family == "cycle")
        spec.params = {n};
    else
        throw aec::Error(aec::ErrorKind::InfeasibleSpec, "bench family " + family);
    aec::Graph g = aec::generate(spec);
    row.n = g.num_vertices();
    row.m = g.num_edges();
    aec::DriverStats stats;
    auto t0 = std::chrono::steady_clock::now();
    aec::Coloring c = seven ? aec::color_graph_7(g, {}, &stats) : aec::color_connected_6(g, {}, &stats);
    row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    aec::Verdict v = aec::verify_acyclic(c);
    if (!v.ok() || !c.is_total()) row.error = "verification failed: " + v.describe(g);
    row.colors = c.used_colors().size();
    row.moves = stats.moves;
    row.nodes = stats.path_steps;
    return row;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acyclic edge coloring of graphs with maximum degree 4"};
    app.require_subcommand(1);

    std::string graph_path, coloring_path, trace_path, out_path, expect_path, gen_spec;
    int palette = 6, kmax = 7;
    std::size_t max_edges = aec::kOracleMaxEdges;
    bool debug = false;
    std::uint64_t seed = 1;

    auto* color = app.add_subcommand("color", "color a graph and write the coloring");
    color->add_option("graph", graph_path, "edge-list file")->required();
    color->add_option("--palette", palette, "6 (connected, m <= 2n-1) or 7 (any graph)")
        ->check(CLI::IsMember({6, 7}));
    color->add_option("--trace", trace_path, "write the move trace here");
    color->add_option("-o,--out", out_path, "coloring output (default stdout)");
    color->add_flag("--debug-asserts", debug, "verify after every step");
    std::uint64_t pendant_seed = 0;
    color->add_option("--pendant-seed", pendant_seed, "nonzero: random candidate colors on padding edges");

    auto* verify = app.add_subcommand("verify", "check a coloring is total, proper and acyclic");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("coloring", coloring_path)->required();

    auto* exact = app.add_subcommand("exact", "exact acyclic chromatic index by backtracking");
    exact->add_option("graph", graph_path)->required();
    exact->add_option("--kmax", kmax)->check(CLI::Range(0, 7));
    exact->add_option("--max-edges", max_edges);

    auto* gen = app.add_subcommand("gen", "generate a graph, e.g. \"random_valid(100,199,7)\"");
    gen->add_option("spec", gen_spec)->required();
    gen->add_option("--out,-o", out_path, "edge-list output (default stdout)");
    gen->add_option("--seed", seed, "seed for random families without one");

    auto* rep = app.add_subcommand("replay", "re-apply a trace and verify the result");
    rep->add_option("graph", graph_path)->required();
    rep->add_option("trace", trace_path)->required();
    rep->add_option("--expect", expect_path, "coloring the replay must reproduce exactly");

    std::vector<std::string> families{"random_valid"}, sizes_raw{"1000"};
    std::size_t seeds = 3;
    int threads = 0;
    auto* bench = app.add_subcommand("bench", "time the coloring over generated families; CSV on stdout");
    bench->add_option("--families", families, "random_valid, subcubic_random, random_4regular, cycle");
    bench->add_option("--sizes", sizes_raw, "vertex counts");
    bench->add_option("--seeds", seeds, "seeds 1..N per family and size");
    bench->add_option("--threads", threads, "worker threads (default: OpenMP's choice)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*color) {
            aec::Graph g = aec::read_graph_file(graph_path);
            aec::Trace trace;
            aec::DriverOptions opts;
            opts.debug = debug;
            opts.pendant_seed = pendant_seed;
            if (!trace_path.empty()) opts.trace = &trace;
            aec::DriverStats stats;
            aec::Coloring c =
                palette == 6 ? aec::color_connected_6(g, opts, &stats) : aec::color_graph_7(g, opts, &stats);
            aec::Verdict v = aec::verify_acyclic(c);
            if (!v.ok() || !c.is_total()) {
                std::cerr << "internal error: result does not verify: " << v.describe(g) << '\n';
                return kInternal;
            }
            std::ostringstream os;
            aec::write_coloring(os, c);
            write_to(out_path, os.str());
            if (!trace_path.empty()) {
                std::ostringstream ts;
                trace.write(ts);
                write_to(trace_path, ts.str());
            }
            std::cerr << "colors " << c.used_colors().size() << " extensions " << stats.extensions << " moves "
                      << stats.moves << '\n';
            return kOk;
        }
        if (*verify) {
            aec::Graph g = aec::read_graph_file(graph_path);
            aec::Coloring c = aec::read_coloring_file(coloring_path, g);
            for (aec::EdgeId e : g.edge_ids())
                if (!c.is_colored(e)) {
                    std::cout << "uncolored edge " << g.edge(e).u << "-" << g.edge(e).v << '\n';
                    return kCheckFailed;
                }
            aec::Verdict v = aec::verify_acyclic(c);
            std::cout << v.describe(g) << '\n';
            return v.ok() ? kOk : kCheckFailed;
        }
        if (*exact) {
            aec::Graph g = aec::read_graph_file(graph_path);
            aec::OracleResult r = aec::exact_index(g, kmax, max_edges);
            nlohmann::json j;
            j["n"] = g.num_vertices();
            j["m"] = g.num_edges();
            j["a_prime"] = r.feasible ? nlohmann::json(r.exact_index) : nlohmann::json(nullptr);
            j["nodes"] = r.nodes;
            std::cout << j.dump() << '\n';
            return kOk;
        }
        if (*gen) {
            aec::Graph g = aec::generate(aec::GeneratorSpec::parse(gen_spec, seed));
            std::ostringstream os;
            aec::write_graph(os, g);
            write_to(out_path, os.str());
            return kOk;
        }
        if (*rep) {
            aec::Graph g = aec::read_graph_file(graph_path);
            auto in = aec::open_input(trace_path);
            aec::Trace t = aec::Trace::read(in);
            aec::ReplayReport r = aec::replay(g, t);
            if (!r.ok) {
                std::cout << "replay failed: " << r.message << '\n';
                return kCheckFailed;
            }
            if (!expect_path.empty()) {
                aec::Coloring want = aec::read_coloring_file(expect_path, g);
                for (aec::EdgeId e = 0; e < g.edge_slots(); ++e)
                    if (want.color(e) != r.colors[e]) {
                        std::cout << "replay differs at edge " << g.edge(e).u << "-" << g.edge(e).v << ": "
                                  << int(r.colors[e]) << " vs " << int(want.color(e)) << '\n';
                        return kCheckFailed;
                    }
                if (want.palette() != t.palette) {
                    std::cout << "palette differs\n";
                    return kCheckFailed;
                }
            }
            std::cout << "ok\n";
            return kOk;
        }
        if (*bench) {
            std::vector<std::string> fams = split_list(families);
            std::vector<std::size_t> sizes;
            for (const auto& s : split_list(sizes_raw)) sizes.push_back(std::stoull(s));
            struct Job {
                std::string family;
                std::size_t n;
                std::uint64_t seed;
            };
            std::vector<Job> jobs;
            for (const auto& f : fams)
                for (std::size_t n : sizes)
                    for (std::uint64_t s = 1; s <= seeds; ++s) jobs.push_back({f, n, s});
            std::vector<BenchRow> rows(jobs.size());
            if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic, 1)
            for (std::size_t i = 0; i < jobs.size(); ++i) {
                try {
                    rows[i] = bench_one(jobs[i].family, jobs[i].n, jobs[i].seed);
                } catch (const std::exception& e) {
                    rows[i].family = jobs[i].family;
                    rows[i].error = e.what();
                }
            }
            int rc = kOk;
            std::cout << "family,n,m,colors,moves,nodes,ms\n";
            for (const auto& r : rows) {
                if (!r.error.empty()) {
                    std::cerr << r.family << ": " << r.error << '\n';
                    rc = kInternal;
                    continue;
                }
                std::cout << r.family << ',' << r.n << ',' << r.m << ',' << r.colors << ',' << r.moves << ','
                          << r.nodes << ',' << r.ms << '\n';
            }
            return rc;
        }
    } catch (const aec::Error& e) {
        std::cerr << e.what() << '\n';
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
