// Vector solution of the Gibbs problem (Bate, Mueller & White).
#pragma once

#include "gibbsod/geometry.hpp"
#include "gibbsod/orbit.hpp"

namespace gibbsod {

struct GibbsIntermediates {
    Vector3 N;  ///< km³
    Vector3 D;  ///< km²
    Vector3 S;  ///< km²
};

/// N, D and S from three coplanar positions. Throws DuplicatePoints,
/// CollinearPositions, NonCoplanar, or InvalidGeometry when N·D <= 0.
GibbsIntermediates gibbs_intermediates(const Vector3& r1, const Vector3& r2, const Vector3& r3,
                                       const SolveOptions& opts = {});

/// v = sqrt(mu / (N D)) (D × r / |r| + S), mu in km³/s².
Vector3 gibbs_velocity(const GibbsIntermediates& g, const Vector3& r, double mu);

/// Perifocal basis, p = N/D, e = S/D and a = p/(1 - e²). p_hat and q_hat are
/// left empty when |S| <= 1e-10 |D|.
OrbitGeometry gibbs_geometry(const GibbsIntermediates& g);

OrbitGeometry solve_classical(const Vector3& r1, const Vector3& r2, const Vector3& r3,
                              const SolveOptions& opts = {});

}  // namespace gibbsod
