#include "gibbsod/elements.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "gibbsod/conic.hpp"
#include "gibbsod/error.hpp"

namespace gibbsod {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Node vector length below which the orbit counts as equatorial.
constexpr double kEquatorialTol = 1e-12;

void require_mu(double mu) {
    if (!(mu > 0.0) || !std::isfinite(mu)) throw OdError(ErrorCode::InputError, "mu must be positive");
}

}  // namespace

double wrap_two_pi(double angle) {
    double w = std::fmod(angle, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w >= kTwoPi ? 0.0 : w;
}

double max_true_anomaly(double e) {
    return e > 1.0 ? std::acos(-1.0 / e) : std::numbers::pi;
}

void validate(const KeplerElements& k) {
    const bool finite = std::isfinite(k.a) && std::isfinite(k.e) && std::isfinite(k.i) &&
                        std::isfinite(k.raan) && std::isfinite(k.argp);
    if (!finite) throw OdError(ErrorCode::InputError, "elements must be finite");
    if (k.e < 0.0) throw OdError(ErrorCode::InputError, "eccentricity must be non-negative");
    if (k.e == 1.0) throw OdError(ErrorCode::InputError, "parabolic elements need p, not a");
    if (k.e < 1.0 && !(k.a > 0.0)) throw OdError(ErrorCode::InputError, "elliptic orbit needs a > 0");
    if (k.e > 1.0 && !(k.a < 0.0)) throw OdError(ErrorCode::InputError, "hyperbolic orbit needs a < 0");
    if (k.i < 0.0 || k.i > std::numbers::pi) throw OdError(ErrorCode::InputError, "inclination outside [0, pi]");
}

OrbitGeometry elements_to_geometry(const KeplerElements& k) {
    validate(k);
    const double cO = std::cos(k.raan), sO = std::sin(k.raan);
    const double ci = std::cos(k.i), si = std::sin(k.i);
    const double cw = std::cos(k.argp), sw = std::sin(k.argp);

    OrbitGeometry g;
    g.p_hat = Vector3{cO * cw - sO * sw * ci, sO * cw + cO * sw * ci, sw * si};
    g.q_hat = Vector3{-cO * sw - sO * cw * ci, -sO * sw + cO * cw * ci, cw * si};
    g.w_hat = Vector3{sO * si, -cO * si, ci};
    g.p = k.semi_latus_rectum();
    g.e = k.e;
    g.a = k.a;
    return g;
}

KeplerElements geometry_to_elements(const OrbitGeometry& g) {
    const Vector3& w = g.w_hat;
    KeplerElements k;
    k.e = g.e;
    const double one_minus_e2 = 1.0 - g.e * g.e;
    k.a = std::abs(one_minus_e2) < kParabolaTol ? std::numeric_limits<double>::infinity()
                                                : g.p / one_minus_e2;
    k.i = std::acos(std::clamp(w.z, -1.0, 1.0));

    Vector3 node{-w.y, w.x, 0.0};
    const double node_len = norm(node);
    if (node_len <= kEquatorialTol) {
        k.raan = 0.0;
        node = {1.0, 0.0, 0.0};
    } else {
        node = node / node_len;
        k.raan = wrap_two_pi(std::atan2(w.x, -w.y));
    }

    if (g.p_hat && g.e >= kCircularEccentricityTol) {
        const Vector3 ahead = cross(w, node);
        k.argp = wrap_two_pi(std::atan2(dot(*g.p_hat, ahead), dot(*g.p_hat, node)));
    } else {
        k.argp = 0.0;
    }
    return k;
}

Vector3 position_at(const KeplerElements& k, double theta) {
    const double denom = 1.0 + k.e * std::cos(theta);
    if (!(denom > 0.0)) {
        throw OdError(ErrorCode::BeyondAsymptote, "true anomaly beyond the hyperbolic asymptote");
    }
    const OrbitGeometry g = elements_to_geometry(k);
    const double r = g.p / denom;
    return r * (std::cos(theta) * *g.p_hat + std::sin(theta) * *g.q_hat);
}

Vector3 velocity_at(const KeplerElements& k, double theta, double mu) {
    require_mu(mu);
    if (!(1.0 + k.e * std::cos(theta) > 0.0)) {
        throw OdError(ErrorCode::BeyondAsymptote, "true anomaly beyond the hyperbolic asymptote");
    }
    const OrbitGeometry g = elements_to_geometry(k);
    const double scale = std::sqrt(mu / g.p);
    return scale * (-std::sin(theta) * *g.p_hat + (k.e + std::cos(theta)) * *g.q_hat);
}

Vector3 velocity_from_geometry(const OrbitGeometry& g, const Vector3& r, double mu) {
    require_mu(mu);
    Vector3 dir = cross(g.w_hat, r) / norm(r);
    if (g.q_hat) dir = dir + g.e * *g.q_hat;
    return std::sqrt(mu / g.p) * dir;
}

double true_anomaly_of(const OrbitGeometry& g, const Vector3& r) {
    if (!g.p_hat || !g.q_hat || g.e <= kCircularEccentricityTol) {
        throw OdError(ErrorCode::CircularAmbiguity, "true anomaly is undefined on a circular orbit");
    }
    return wrap_two_pi(std::atan2(dot(*g.q_hat, r), dot(*g.p_hat, r)));
}

}  // namespace gibbsod
