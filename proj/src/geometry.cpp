#include "gibbsod/geometry.hpp"

#include <algorithm>

#include "gibbsod/error.hpp"

namespace gibbsod {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InputError: return "InputError";
        case ErrorCode::CollinearPositions: return "CollinearPositions";
        case ErrorCode::NonCoplanar: return "NonCoplanar";
        case ErrorCode::DuplicatePoints: return "DuplicatePoints";
        case ErrorCode::DegenerateIntersection: return "DegenerateIntersection";
        case ErrorCode::PointAtInfinity: return "PointAtInfinity";
        case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
        case ErrorCode::InvalidConic: return "InvalidConic";
        case ErrorCode::InvalidGeometry: return "InvalidGeometry";
        case ErrorCode::BeyondAsymptote: return "BeyondAsymptote";
        case ErrorCode::CircularAmbiguity: return "CircularAmbiguity";
    }
    return "Unknown";
}

int exit_code(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InputError:
        case ErrorCode::BeyondAsymptote:
        case ErrorCode::CircularAmbiguity:
            return 2;
        case ErrorCode::CollinearPositions:
            return 3;
        case ErrorCode::NonCoplanar:
            return 4;
        case ErrorCode::DuplicatePoints:
        case ErrorCode::DegenerateIntersection:
        case ErrorCode::PointAtInfinity:
        case ErrorCode::DegenerateConfiguration:
            return 5;
        case ErrorCode::InvalidConic:
        case ErrorCode::InvalidGeometry:
            return 6;
    }
    return 1;
}

bool projectively_equal(const Homogeneous& a, const Homogeneous& b, double rel_tol) {
    if (a.is_zero() || b.is_zero()) return false;
    return norm(cross(a.vec(), b.vec())) <= rel_tol * norm(a) * norm(b);
}

double determinant(const Matrix3& a) {
    return dot(a.row(0), cross(a.row(1), a.row(2)));
}

double frobenius_norm(const Matrix3& a) {
    double s = 0.0;
    for (double v : a.m) s += v * v;
    return std::sqrt(s);
}

Homogeneous intersect_lines(const Homogeneous& l1, const Homogeneous& l2) {
    const Vector3 p = cross(l1.vec(), l2.vec());
    if (norm(p) < 1e-300) {
        throw OdError(ErrorCode::DegenerateIntersection, "lines are projectively identical");
    }
    return Homogeneous::from(p);
}

std::pair<double, double> dehomogenize(const Homogeneous& q) {
    const double scale = std::max({std::abs(q.h1), std::abs(q.h2), std::abs(q.h3)});
    if (!(std::abs(q.h3) > 1e-12 * scale)) {
        throw OdError(ErrorCode::PointAtInfinity, "homogeneous point lies at infinity");
    }
    return {q.h1 / q.h3, q.h2 / q.h3};
}

}  // namespace gibbsod
