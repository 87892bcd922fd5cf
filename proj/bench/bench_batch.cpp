// Serial vs OpenMP batch solve throughput on random elliptic orbits.
//
//   bench_batch [n_triples] [repeats]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <random>
#include <vector>

#include "gibbsod/batch.hpp"
#include "gibbsod/elements.hpp"

using namespace gibbsod;

namespace {

std::vector<PositionTriple> make_triples(std::size_t n) {
    std::mt19937_64 rng(20240917);
    std::uniform_real_distribution<double> a(7000.0, 1e5), e(0.01, 0.95), inc(0.02, std::numbers::pi - 0.02),
        angle(0.0, 2.0 * std::numbers::pi), gap(0.1, 2.0);
    std::vector<PositionTriple> out;
    out.reserve(n);
    while (out.size() < n) {
        const KeplerElements k{a(rng), e(rng), inc(rng), angle(rng), angle(rng)};
        const double t1 = angle(rng);
        const double t2 = t1 + gap(rng);
        const double t3 = t2 + gap(rng);
        out.push_back({position_at(k, t1), position_at(k, t2), position_at(k, t3)});
    }
    return out;
}

template <typename F>
double best_ms(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200000;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;
    const auto triples = make_triples(n);

    std::cout << "triples " << n << ", threads " << batch_threads() << "\n";
    for (Method m : {Method::Algebraic, Method::Classical}) {
        std::size_t failures = 0;
        const double serial = best_ms(repeats, [&] { solve_batch_serial(triples, m); });
        const double parallel = best_ms(repeats, [&] {
            const auto res = solve_batch(triples, m);
            failures = 0;
            for (const auto& r : res) failures += !r.ok();
        });
        std::cout << (m == Method::Algebraic ? "algebraic" : "classical") << "  serial " << serial
                  << " ms  openmp " << parallel << " ms  speedup " << serial / parallel << "  failures "
                  << failures << "\n";
    }
}
