#pragma once

#include <array>
#include <optional>

#include "gibbsod/geometry.hpp"

namespace gibbsod {

/// Default bound on |ŵ·r̂| for a position to count as lying in the orbit plane.
inline constexpr double kDefaultCoplanarityTol = 1e-5;

struct SolveOptions {
    double coplanarity_tol = kDefaultCoplanarityTol;
};

using PositionTriple = std::array<Vector3, 3>;

/**
 * Orientation, size and shape of a Keplerian orbit.
 *
 * p_hat and q_hat are absent when the orbit is circular to within
 * kCircularEccentricityTol; w_hat is always present. a is negative for
 * hyperbolas and +inf for parabolas.
 */
struct OrbitGeometry {
    std::optional<Vector3> p_hat;
    std::optional<Vector3> q_hat;
    Vector3 w_hat;
    double p = 0.0;  ///< km
    double e = 0.0;
    double a = 0.0;  ///< km
};

/// Throws InputError if any component is NaN or infinite.
void require_finite(const PositionTriple& r);

/// Throws DuplicatePoints if two positions coincide to within 1e-9 of the
/// largest radius.
void require_distinct(const PositionTriple& r);

/// Throws CollinearPositions when the three positions lie on one straight
/// line: ‖(r2-r1)×(r3-r1)‖ <= 1e-12·‖r2-r1‖·‖r3-r1‖. No conic meets a line
/// three times.
void require_not_collinear(const PositionTriple& r);

}  // namespace gibbsod
