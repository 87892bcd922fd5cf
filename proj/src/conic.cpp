#include "gibbsod/conic.hpp"

#include <limits>

#include "gibbsod/error.hpp"

namespace gibbsod {

Matrix3 envelope_matrix(const FocusConic& c) {
    return {{1.0, 0.0, c.X,
             0.0, 1.0, c.Y,
             c.X, c.Y, -c.Zsq}};
}

Matrix3 locus_matrix(const FocusConic& c) {
    const double xy = c.X * c.Y;
    return {{-(c.Y * c.Y + c.Zsq), xy, -c.X,
             xy, -(c.X * c.X + c.Zsq), -c.Y,
             -c.X, -c.Y, 1.0}};
}

double normalized_residual(const FocusConic& c, double x, double y) {
    const Matrix3 C = locus_matrix(c);
    const Vector3 xb{x, y, 1.0};
    return std::abs(quadratic_form(C, xb)) / (dot(xb, xb) * frobenius_norm(C));
}

ConicGeometry2D geometry_from_conic(const FocusConic& c) {
    const double s = c.scale_sq();
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw OdError(ErrorCode::InvalidConic, "X^2 + Y^2 + Z^2 must be positive");
    }
    const double apse_sq = c.X * c.X + c.Y * c.Y;
    const double root = std::sqrt(s);

    ConicGeometry2D g;
    g.p = 1.0 / root;
    g.e = std::sqrt(apse_sq / s);
    if (g.e >= kCircularEccentricityTol) {
        const double apse = std::sqrt(apse_sq);
        g.periapsis_dir = Direction2{c.X / apse, c.Y / apse};
    }
    if (std::abs(c.Zsq) < kParabolaTol * apse_sq) {
        g.a = std::numeric_limits<double>::infinity();
    } else {
        g.a = root / c.Zsq;
    }
    if (c.Zsq > 0.0 && !g.is_parabolic()) g.b = 1.0 / std::sqrt(c.Zsq);
    return g;
}

}  // namespace gibbsod
