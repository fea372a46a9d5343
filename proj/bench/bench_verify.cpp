// Serial vs OpenMP acyclicity verification on colored random graphs.
// Usage: bench_verify [n ...]   CSV on stdout.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <vector>

#include <omp.h>

#include "aec/driver.hpp"
#include "aec/generators.hpp"

namespace {

template <class F>
double time_ms(F&& f, int reps) {
    auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> sizes;
    for (int i = 1; i < argc; ++i) sizes.push_back(std::strtoull(argv[i], nullptr, 10));
    if (sizes.empty()) sizes = {1000, 10000, 100000};

    std::cout << "n,m,threads,serial_ms,parallel_ms,agree\n";
    for (std::size_t n : sizes) {
        aec::Graph g = aec::random_valid(n, 2 * n - 1, 42);
        aec::Coloring c = aec::color_connected_6(g);
        aec::Verdict s, p;
        double ts = time_ms([&] { s = aec::verify_acyclic_serial(c); }, 5);
        double tp = time_ms([&] { p = aec::verify_acyclic(c); }, 5);
        bool agree = s.kind == p.kind && s.alpha == p.alpha && s.beta == p.beta;
        std::cout << n << ',' << g.num_edges() << ',' << omp_get_max_threads() << ',' << ts << ',' << tp << ','
                  << (agree ? "yes" : "no") << '\n';
        if (!agree) return 1;
    }
    return 0;
}
