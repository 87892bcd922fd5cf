// Orbit determination by fitting a focus-at-origin conic to three planar
// points. Each point beyond the first constrains (X, Y) to one of two lines;
// the physical solution is the intersection u123 × v123.
#pragma once

#include <array>

#include "gibbsod/conic.hpp"
#include "gibbsod/geometry.hpp"
#include "gibbsod/orbit.hpp"
#include "gibbsod/plane.hpp"

namespace gibbsod {

/// The two line factors of the conic constraint at point 2 (u) and point 3 (v).
struct LinePair {
    Homogeneous u123;
    Homogeneous u456;
    Homogeneous v123;
    Homogeneous v456;
};

enum class Candidate { U123xV123 = 0, U456xV123 = 1, U123xV456 = 2, U456xV456 = 3 };

/**
 * Determinant sign tests deciding which line intersection keeps all three
 * points on the physical branch r = p / (1 + e cos θ).
 *
 * k1 = det[x y r], k2 = det[x y 1], k3 = det[x y r] with r2 negated.
 * k_flip3 and k_flip23 negate r3, and both r2 and r3, for the remaining
 * candidates.
 */
struct BranchDiagnostics {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;
    double k_flip3 = 0.0;
    double k_flip23 = 0.0;
    std::array<bool, 4> consistent{};  ///< indexed by Candidate

    bool is_consistent(Candidate c) const { return consistent[static_cast<std::size_t>(c)]; }
};

/// Throws DuplicatePoints when two points coincide (1e-9 of the largest
/// radius) and InputError for a point at the focus.
LinePair build_lines(const PlanarPoint& p1, const PlanarPoint& p2, const PlanarPoint& p3);

/**
 * X, Y from s = u123 × v123 and Z² from point 1.
 *
 * Throws DegenerateConfiguration if the lines do not meet at a finite point
 * or the fitted conic misses a point, and InvalidConic if X² + Y² + Z² <= 0
 * or the points sit on the branch that opens away from the focus.
 */
FocusConic fit_conic(const PlanarPoint& p1, const PlanarPoint& p2, const PlanarPoint& p3);

/// Fit through a precomputed line pair; same errors as fit_conic.
FocusConic fit_conic(const LinePair& lines, const PlanarPoint& p1, const PlanarPoint& p2,
                     const PlanarPoint& p3);

BranchDiagnostics branch_diagnostics(const PlanarPoint& p1, const PlanarPoint& p2,
                                     const PlanarPoint& p3);

/// Every intermediate of one algebraic solve.
struct AlgebraicSolution {
    OrbitPlaneFrame frame;
    std::array<PlanarPoint, 3> points;
    LinePair lines;
    FocusConic conic;
    ConicGeometry2D planar;
    OrbitGeometry orbit;
};

AlgebraicSolution solve_algebraic_detailed(const PositionTriple& r, const SolveOptions& opts = {});

/// Full pipeline: frame, projection, conic fit, geometry.
OrbitGeometry solve_algebraic(const Vector3& r1, const Vector3& r2, const Vector3& r3,
                              const SolveOptions& opts = {});

}  // namespace gibbsod
