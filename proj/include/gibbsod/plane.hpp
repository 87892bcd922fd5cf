#pragma once

#include "gibbsod/conic.hpp"
#include "gibbsod/geometry.hpp"
#include "gibbsod/orbit.hpp"

namespace gibbsod {

/**
 * Intermediate frame spanning the orbit plane.
 *
 * w is the plane normal along r1 × r2, e2 = ŵ × r̂1 and e1 = e2 × w, so r1
 * lands on the +e1 axis. to_plane has rows e1, e2, w and rotates inertial
 * vectors into this frame.
 */
struct OrbitPlaneFrame {
    Vector3 e1;
    Vector3 e2;
    Vector3 w;
    Matrix3 to_plane;
    double coplanarity_tol = kDefaultCoplanarityTol;
};

/// A position expressed in the orbit plane; homogeneous form is (x, y, 1).
struct PlanarPoint {
    double x = 0.0;  ///< km
    double y = 0.0;  ///< km
    double r = 0.0;  ///< km, sqrt(x² + y²)

    Vector3 homogeneous() const { return {x, y, 1.0}; }
};

/// Throws CollinearPositions when ‖r1×r2‖ <= 1e-12‖r1‖‖r2‖ and NonCoplanar
/// when r3 leaves the plane by more than coplanarity_tol.
OrbitPlaneFrame build_frame(const Vector3& r1, const Vector3& r2, const Vector3& r3,
                            double coplanarity_tol = kDefaultCoplanarityTol);

PlanarPoint project(const OrbitPlaneFrame& frame, const Vector3& r);

/// Maps an in-plane unit direction back to the inertial frame.
Vector3 unproject_direction(const OrbitPlaneFrame& frame, const Direction2& dir);

}  // namespace gibbsod
