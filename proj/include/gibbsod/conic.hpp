#pragma once

#include <optional>

#include "gibbsod/geometry.hpp"

namespace gibbsod {

/// Below this eccentricity the periapsis direction is not reported.
inline constexpr double kCircularEccentricityTol = 1e-10;

/// |Zsq| below this fraction of X² + Y² is treated as a parabola.
inline constexpr double kParabolaTol = 1e-12;

/**
 * Conic with one focus pinned at the origin of the orbit plane.
 *
 * (X, Y) points from the focus toward periapsis with magnitude e/p, in km⁻¹.
 * Zsq carries Z² in km⁻² and keeps its sign: positive for ellipses, zero for
 * parabolas, negative for hyperbolas.
 */
struct FocusConic {
    double X = 0.0;
    double Y = 0.0;
    double Zsq = 0.0;

    /// X² + Y² + Z², which equals 1/p².
    double scale_sq() const { return X * X + Y * Y + Zsq; }
};

struct Direction2 {
    double x = 0.0;
    double y = 0.0;
};

struct ConicGeometry2D {
    std::optional<Direction2> periapsis_dir;  ///< absent for near-circular conics
    double p = 0.0;                           ///< km
    double e = 0.0;
    double a = 0.0;                           ///< km; negative for hyperbolas, +inf for parabolas
    std::optional<double> b;                  ///< km; ellipses only

    bool is_parabolic() const { return std::isinf(a); }
};

/// C⁻¹ up to scale: [[1,0,X],[0,1,Y],[X,Y,-Zsq]]. Its line conic is a circle.
Matrix3 envelope_matrix(const FocusConic& c);

/// C up to scale: the point conic with a focus at the origin.
Matrix3 locus_matrix(const FocusConic& c);

/// x̄ᵀ·C·x̄ divided by ‖x̄‖²·‖C‖ for the planar point (x, y, 1).
double normalized_residual(const FocusConic& c, double x, double y);

/// Periapsis direction, p, e, a and b. Throws InvalidConic when
/// X² + Y² + Zsq <= 0.
ConicGeometry2D geometry_from_conic(const FocusConic& c);

}  // namespace gibbsod
