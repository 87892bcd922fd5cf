#include "gibbsod/algebraic.hpp"

#include <algorithm>
#include <tuple>

#include "gibbsod/error.hpp"

namespace gibbsod {

namespace {

constexpr double kResidualTol = 1e-9;

// Factors of the constraint at point j (paired with point 1):
//   first  = (rj + r1)(rj x1 - r1 xj, rj y1 - r1 yj, r1² - rj²)
//   second = (rj - r1)(rj x1 + r1 xj, rj y1 + r1 yj, r1² - rj²)
std::pair<Homogeneous, Homogeneous> line_factors(const PlanarPoint& p1, const PlanarPoint& pj) {
    const double sum = pj.r + p1.r;
    const double diff = pj.r - p1.r;
    const double c = p1.r * p1.r - pj.r * pj.r;
    return {
        {sum * (pj.r * p1.x - p1.r * pj.x), sum * (pj.r * p1.y - p1.r * pj.y), c},
        {diff * (pj.r * p1.x + p1.r * pj.x), diff * (pj.r * p1.y + p1.r * pj.y), c},
    };
}

double det_columns(const std::array<PlanarPoint, 3>& pts, const std::array<double, 3>& third) {
    Matrix3 m;
    for (int i = 0; i < 3; ++i) {
        const auto& p = pts[static_cast<std::size_t>(i)];
        m(i, 0) = p.x;
        m(i, 1) = p.y;
        m(i, 2) = third[static_cast<std::size_t>(i)];
    }
    return determinant(m);
}

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

// The polar equation holds at point i when K2·|K| = σᵢ·K·|K2|.
bool signs_consistent(double k2, double k, const std::array<int, 3>& sigma) {
    return std::all_of(sigma.begin(), sigma.end(), [&](int s) {
        return sgn(k2) * (k != 0.0) == s * sgn(k) * (k2 != 0.0);
    });
}

}  // namespace

LinePair build_lines(const PlanarPoint& p1, const PlanarPoint& p2, const PlanarPoint& p3) {
    const std::array<const PlanarPoint*, 3> pts{&p1, &p2, &p3};
    double rmax = 0.0;
    for (const auto* p : pts) {
        if (!(p->r > 0.0)) throw OdError(ErrorCode::InputError, "planar point at the focus");
        rmax = std::max(rmax, p->r);
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            if (std::hypot(pts[i]->x - pts[j]->x, pts[i]->y - pts[j]->y) <= 1e-9 * rmax) {
                throw OdError(ErrorCode::DuplicatePoints, "planar points coincide");
            }
        }
    }
    auto [u123, u456] = line_factors(p1, p2);
    auto [v123, v456] = line_factors(p1, p3);
    return {u123, u456, v123, v456};
}

FocusConic fit_conic(const PlanarPoint& p1, const PlanarPoint& p2, const PlanarPoint& p3) {
    return fit_conic(build_lines(p1, p2, p3), p1, p2, p3);
}

FocusConic fit_conic(const LinePair& lines, const PlanarPoint& p1, const PlanarPoint& p2,
                     const PlanarPoint& p3) {
    FocusConic c;
    try {
        const Homogeneous s = intersect_lines(lines.u123, lines.v123);
        std::tie(c.X, c.Y) = dehomogenize(s);
    } catch (const OdError& err) {
        throw OdError(ErrorCode::DegenerateConfiguration, err.what());
    }

    // Z² makes point 1 satisfy x̄ᵀCx̄ = 0; C is linear in Z² with coefficient -r1².
    const double X = c.X;
    const double Y = c.Y;
    const Matrix3 without_z{{-Y * Y, X * Y, -X,
                             X * Y, -X * X, -Y,
                             -X, -Y, 1.0}};
    c.Zsq = quadratic_form(without_z, p1.homogeneous()) / (p1.r * p1.r);

    if (!(c.scale_sq() > 0.0)) {
        throw OdError(ErrorCode::InvalidConic, "fitted conic has X^2 + Y^2 + Z^2 <= 0");
    }
    for (const auto* p : {&p1, &p2, &p3}) {
        // On the conic, 1 - X x - Y y = ±r·sqrt(X²+Y²+Z²); the minus sign is the
        // branch that opens away from the focus.
        if (!(1.0 - X * p->x - Y * p->y > 0.0)) {
            throw OdError(ErrorCode::InvalidConic, "points lie on the branch opening away from the focus");
        }
        if (!(normalized_residual(c, p->x, p->y) <= kResidualTol)) {
            throw OdError(ErrorCode::DegenerateConfiguration, "fitted conic misses an input point");
        }
    }
    return c;
}

BranchDiagnostics branch_diagnostics(const PlanarPoint& p1, const PlanarPoint& p2,
                                     const PlanarPoint& p3) {
    build_lines(p1, p2, p3);  // precondition checks only
    const std::array<PlanarPoint, 3> pts{p1, p2, p3};

    BranchDiagnostics d;
    d.k1 = det_columns(pts, {p1.r, p2.r, p3.r});
    d.k2 = det_columns(pts, {1.0, 1.0, 1.0});
    d.k3 = det_columns(pts, {p1.r, -p2.r, p3.r});
    d.k_flip3 = det_columns(pts, {p1.r, p2.r, -p3.r});
    d.k_flip23 = det_columns(pts, {p1.r, -p2.r, -p3.r});

    d.consistent[0] = signs_consistent(d.k2, d.k1, {1, 1, 1});
    d.consistent[1] = signs_consistent(d.k2, d.k3, {1, -1, 1});
    d.consistent[2] = signs_consistent(d.k2, d.k_flip3, {1, 1, -1});
    d.consistent[3] = signs_consistent(d.k2, d.k_flip23, {1, -1, -1});
    return d;
}

AlgebraicSolution solve_algebraic_detailed(const PositionTriple& r, const SolveOptions& opts) {
    require_finite(r);
    require_distinct(r);

    AlgebraicSolution sol;
    sol.frame = build_frame(r[0], r[1], r[2], opts.coplanarity_tol);
    require_not_collinear(r);
    for (std::size_t i = 0; i < 3; ++i) sol.points[i] = project(sol.frame, r[i]);

    const auto& [p1, p2, p3] = sol.points;
    sol.lines = build_lines(p1, p2, p3);
    sol.conic = fit_conic(sol.lines, p1, p2, p3);
    sol.planar = geometry_from_conic(sol.conic);

    OrbitGeometry& g = sol.orbit;
    g.w_hat = sol.frame.w;
    if (sol.planar.periapsis_dir) {
        g.p_hat = unproject_direction(sol.frame, *sol.planar.periapsis_dir);
        g.q_hat = cross(g.w_hat, *g.p_hat);
    }
    g.p = sol.planar.p;
    g.e = sol.planar.e;
    g.a = sol.planar.a;
    return sol;
}

OrbitGeometry solve_algebraic(const Vector3& r1, const Vector3& r2, const Vector3& r3,
                              const SolveOptions& opts) {
    return solve_algebraic_detailed({r1, r2, r3}, opts).orbit;
}

}  // namespace gibbsod
