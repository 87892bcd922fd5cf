// Three-vector arithmetic and projective-plane primitives.
#pragma once

#include <array>
#include <cmath>
#include <utility>

namespace gibbsod {

struct Vector3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vector3 operator+(const Vector3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vector3 operator-(const Vector3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vector3 operator-() const { return {-x, -y, -z}; }
    constexpr Vector3 operator*(double k) const { return {x * k, y * k, z * k}; }
    constexpr Vector3 operator/(double k) const { return {x / k, y / k, z / k}; }
    constexpr bool operator==(const Vector3&) const = default;

    bool is_finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

constexpr Vector3 operator*(double k, const Vector3& v) { return v * k; }

constexpr double dot(const Vector3& a, const Vector3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vector3 cross(const Vector3& a, const Vector3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vector3& v) { return std::sqrt(dot(v, v)); }

inline Vector3 normalized(const Vector3& v) { return v / norm(v); }

/**
 * A point or a line of the projective plane. Equality is up to a nonzero
 * scale; the stored scale is never normalized so intermediate magnitudes
 * stay inspectable.
 */
struct Homogeneous {
    double h1 = 0.0;
    double h2 = 0.0;
    double h3 = 0.0;

    constexpr Vector3 vec() const { return {h1, h2, h3}; }
    static constexpr Homogeneous from(const Vector3& v) { return {v.x, v.y, v.z}; }
    constexpr bool operator==(const Homogeneous&) const = default;

    bool is_zero() const { return h1 == 0.0 && h2 == 0.0 && h3 == 0.0; }
};

constexpr double dot(const Homogeneous& a, const Homogeneous& b) { return dot(a.vec(), b.vec()); }
inline double norm(const Homogeneous& h) { return norm(h.vec()); }

/// Projective equality: a is a nonzero multiple of b, within `rel_tol` of
/// the operand norms.
bool projectively_equal(const Homogeneous& a, const Homogeneous& b, double rel_tol = 1e-12);

// Row-major 3x3.
struct Matrix3 {
    std::array<double, 9> m{};

    constexpr double operator()(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }
    constexpr double& operator()(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }

    static constexpr Matrix3 identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }
    static constexpr Matrix3 from_rows(const Vector3& a, const Vector3& b, const Vector3& c) {
        return {{a.x, a.y, a.z, b.x, b.y, b.z, c.x, c.y, c.z}};
    }

    constexpr Vector3 row(int r) const { return {(*this)(r, 0), (*this)(r, 1), (*this)(r, 2)}; }
    constexpr Matrix3 transposed() const {
        Matrix3 t;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
        return t;
    }
    constexpr bool operator==(const Matrix3&) const = default;
};

constexpr Vector3 operator*(const Matrix3& a, const Vector3& v) {
    return {dot(a.row(0), v), dot(a.row(1), v), dot(a.row(2), v)};
}

constexpr Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a(r, k) * b(k, c);
            out(r, c) = s;
        }
    return out;
}

/// xᵀ·A·x
constexpr double quadratic_form(const Matrix3& a, const Vector3& v) { return dot(v, a * v); }

double determinant(const Matrix3& a);

/// Frobenius norm.
double frobenius_norm(const Matrix3& a);

/// The point shared by two lines. Throws DegenerateIntersection when the
/// lines are projectively identical (cross product below 1e-300).
Homogeneous intersect_lines(const Homogeneous& l1, const Homogeneous& l2);

/// Affine coordinates (h1/h3, h2/h3). Throws PointAtInfinity when
/// |h3| <= 1e-12 * max |h_k|.
std::pair<double, double> dehomogenize(const Homogeneous& q);

}  // namespace gibbsod
