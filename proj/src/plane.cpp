#include "gibbsod/plane.hpp"

#include <algorithm>
#include <string>

#include "gibbsod/error.hpp"

namespace gibbsod {

namespace {

void check_coplanar(const Vector3& w, const Vector3& r, double tol) {
    const double rn = norm(r);
    if (!(std::abs(dot(w, r)) <= tol * rn)) {
        throw OdError(ErrorCode::NonCoplanar,
                      "position leaves the orbit plane by |w.r|/|r| = " +
                          std::to_string(std::abs(dot(w, r)) / rn));
    }
}

}  // namespace

OrbitPlaneFrame build_frame(const Vector3& r1, const Vector3& r2, const Vector3& r3,
                            double coplanarity_tol) {
    const double n1 = norm(r1);
    const double n2 = norm(r2);
    if (n1 == 0.0 || n2 == 0.0 || norm(r3) == 0.0) {
        throw OdError(ErrorCode::CollinearPositions, "position at the focus");
    }
    const Vector3 h = cross(r1, r2);
    const double hn = norm(h);
    if (!(hn > 1e-12 * n1 * n2)) {
        throw OdError(ErrorCode::CollinearPositions, "r1 and r2 are collinear with the focus");
    }

    OrbitPlaneFrame f;
    f.w = h / hn;
    f.e2 = normalized(cross(f.w, r1));
    f.e1 = cross(f.e2, f.w);
    f.to_plane = Matrix3::from_rows(f.e1, f.e2, f.w);
    f.coplanarity_tol = coplanarity_tol;
    check_coplanar(f.w, r3, coplanarity_tol);
    return f;
}

PlanarPoint project(const OrbitPlaneFrame& frame, const Vector3& r) {
    check_coplanar(frame.w, r, frame.coplanarity_tol);
    const double x = dot(frame.e1, r);
    const double y = dot(frame.e2, r);
    return {x, y, std::hypot(x, y)};
}

Vector3 unproject_direction(const OrbitPlaneFrame& frame, const Direction2& dir) {
    return frame.to_plane.transposed() * Vector3{dir.x, dir.y, 0.0};
}

}  // namespace gibbsod
