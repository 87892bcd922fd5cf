#include "gibbsod/classical.hpp"

#include <limits>

#include "gibbsod/conic.hpp"
#include "gibbsod/error.hpp"
#include "gibbsod/plane.hpp"

namespace gibbsod {

namespace {

void require_valid(const GibbsIntermediates& g) {
    if (!(dot(g.N, g.D) > 0.0)) {
        throw OdError(ErrorCode::InvalidGeometry, "N.D <= 0: no orbit with these positions");
    }
}

}  // namespace

GibbsIntermediates gibbs_intermediates(const Vector3& r1, const Vector3& r2, const Vector3& r3,
                                       const SolveOptions& opts) {
    const PositionTriple r{r1, r2, r3};
    require_finite(r);
    require_distinct(r);
    build_frame(r1, r2, r3, opts.coplanarity_tol);  // collinearity and coplanarity gates
    require_not_collinear(r);

    const double n1 = norm(r1);
    const double n2 = norm(r2);
    const double n3 = norm(r3);
    const Vector3 c12 = cross(r1, r2);
    const Vector3 c23 = cross(r2, r3);
    const Vector3 c31 = cross(r3, r1);

    GibbsIntermediates g;
    g.N = n1 * c23 + n2 * c31 + n3 * c12;
    g.D = c12 + c23 + c31;
    g.S = (n2 - n3) * r1 + (n3 - n1) * r2 + (n1 - n2) * r3;
    require_valid(g);
    return g;
}

Vector3 gibbs_velocity(const GibbsIntermediates& g, const Vector3& r, double mu) {
    require_valid(g);
    if (!(mu > 0.0)) throw OdError(ErrorCode::InputError, "mu must be positive");
    const double scale = std::sqrt(mu / (norm(g.N) * norm(g.D)));
    return scale * (cross(g.D, r) / norm(r) + g.S);
}

OrbitGeometry gibbs_geometry(const GibbsIntermediates& g) {
    require_valid(g);
    const double N = norm(g.N);
    const double D = norm(g.D);
    const double S = norm(g.S);

    OrbitGeometry out;
    out.w_hat = g.N / N;
    out.p = N / D;
    out.e = S / D;
    if (S > kCircularEccentricityTol * D) {
        out.p_hat = cross(g.S, g.N) / (S * N);
        out.q_hat = g.S / S;
    }
    const double one_minus_e2 = 1.0 - out.e * out.e;
    out.a = std::abs(one_minus_e2) < kParabolaTol ? std::numeric_limits<double>::infinity()
                                                  : out.p / one_minus_e2;
    return out;
}

OrbitGeometry solve_classical(const Vector3& r1, const Vector3& r2, const Vector3& r3,
                              const SolveOptions& opts) {
    return gibbs_geometry(gibbs_intermediates(r1, r2, r3, opts));
}

}  // namespace gibbsod
