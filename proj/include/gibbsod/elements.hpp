#pragma once

#include "gibbsod/geometry.hpp"
#include "gibbsod/orbit.hpp"

namespace gibbsod {

/**
 * Classical elements. Angles in radians, a in km (negative for hyperbolas).
 *
 * Conventions used by geometry_to_elements:
 *  - i in [0, π]; raan and argp in [0, 2π).
 *  - Equatorial orbits (i = 0 or π): raan = 0 and argp is measured from the
 *    inertial x axis.
 *  - Circular orbits: argp = 0, so periapsis is placed at the node.
 */
struct KeplerElements {
    double a = 0.0;
    double e = 0.0;
    double i = 0.0;
    double raan = 0.0;
    double argp = 0.0;

    double semi_latus_rectum() const { return a * (1.0 - e * e); }
};

/// Throws InputError unless e >= 0, e != 1, a has the sign matching e, and
/// i lies in [0, π].
void validate(const KeplerElements& k);

/// Wraps an angle into [0, 2π).
double wrap_two_pi(double angle);

/// Perifocal basis from the 3-1-3 rotation (raan, i, argp); p_hat and q_hat
/// are always populated.
OrbitGeometry elements_to_geometry(const KeplerElements& k);

KeplerElements geometry_to_elements(const OrbitGeometry& g);

/// Position on the orbit at true anomaly theta. Throws BeyondAsymptote when
/// 1 + e cos(theta) <= 0.
Vector3 position_at(const KeplerElements& k, double theta);

/// Velocity in km/s at true anomaly theta, mu in km³/s².
Vector3 velocity_at(const KeplerElements& k, double theta, double mu);

/// Velocity at an in-plane position: sqrt(mu/p)·(ŵ × r̂ + e·q̂). Works for
/// circular orbits, where q̂ is absent.
Vector3 velocity_from_geometry(const OrbitGeometry& g, const Vector3& r, double mu);

/// atan2(q̂·r, p̂·r) in [0, 2π). Throws CircularAmbiguity for circular orbits.
double true_anomaly_of(const OrbitGeometry& g, const Vector3& r);

/// Largest true anomaly reachable on a hyperbola, acos(-1/e); π otherwise.
double max_true_anomaly(double e);

}  // namespace gibbsod
