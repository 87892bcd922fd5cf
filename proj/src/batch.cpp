#include "gibbsod/batch.hpp"

#include <omp.h>

#include "gibbsod/algebraic.hpp"
#include "gibbsod/classical.hpp"

namespace gibbsod {

BatchOutcome solve_one(const PositionTriple& r, Method method, const SolveOptions& opts) {
    BatchOutcome out;
    try {
        out.orbit = method == Method::Algebraic ? solve_algebraic(r[0], r[1], r[2], opts)
                                                : solve_classical(r[0], r[1], r[2], opts);
    } catch (const OdError& err) {
        out.error = err.code();
    }
    return out;
}

std::vector<BatchOutcome> solve_batch_serial(std::span<const PositionTriple> triples, Method method,
                                             const SolveOptions& opts) {
    std::vector<BatchOutcome> out;
    out.reserve(triples.size());
    for (const auto& t : triples) out.push_back(solve_one(t, method, opts));
    return out;
}

std::vector<BatchOutcome> solve_batch(std::span<const PositionTriple> triples, Method method,
                                      const SolveOptions& opts) {
    std::vector<BatchOutcome> out(triples.size());
    const auto n = static_cast<std::ptrdiff_t>(triples.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] = solve_one(triples[static_cast<std::size_t>(k)], method, opts);
    }
    return out;
}

int batch_threads() { return omp_get_max_threads(); }

}  // namespace gibbsod
