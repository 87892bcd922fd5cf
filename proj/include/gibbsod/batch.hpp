// Many independent three-position solves at once. solve_batch spreads the
// triples over OpenMP threads; solve_batch_serial is the single-threaded
// reference it is tested against. Output order always matches input order.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gibbsod/error.hpp"
#include "gibbsod/orbit.hpp"

namespace gibbsod {

enum class Method { Algebraic, Classical };

struct BatchOutcome {
    std::optional<OrbitGeometry> orbit;
    std::optional<ErrorCode> error;

    bool ok() const { return orbit.has_value(); }
};

BatchOutcome solve_one(const PositionTriple& r, Method method, const SolveOptions& opts);

std::vector<BatchOutcome> solve_batch_serial(std::span<const PositionTriple> triples, Method method,
                                             const SolveOptions& opts = {});

std::vector<BatchOutcome> solve_batch(std::span<const PositionTriple> triples, Method method,
                                      const SolveOptions& opts = {});

/// Threads OpenMP would use for solve_batch.
int batch_threads();

}  // namespace gibbsod
