#pragma once

// Unit quaternion model of SU(2).
//
// A trace-free element of SU(2) is a pure unit quaternion, i.e. a point of
// the 2-sphere.  Conjugation g v g^-1 acts on pure quaternions as the
// rotation of R^3 associated with g; for a pure unit quaternion p the
// conjugation p v p^-1 is the half-turn about the axis p.

#include <cmath>

namespace cassonlin {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        const double n = norm();
        return {x / n, y / n, z / n};
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// A point of the 2-sphere standing for a trace-free SU(2) element.
using TraceFreePoint = Vec3;

struct Quat {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    Quat() = default;
    Quat(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
    Quat(double w_, const Vec3& v) : w(w_), x(v.x), y(v.y), z(v.z) {}

    Vec3 vec() const { return {x, y, z}; }
    double trace() const { return 2.0 * w; }  // trace of the SU(2) matrix
    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
    Quat conjugate() const { return {w, -x, -y, -z}; }
    Quat normalized() const {
        const double n = norm();
        return {w / n, x / n, y / n, z / n};
    }

    static Quat from_axis_angle(const Vec3& axis, double half_angle) {
        const Vec3 a = axis.normalized();
        const double s = std::sin(half_angle);
        return {std::cos(half_angle), a.x * s, a.y * s, a.z * s};
    }
};

inline Quat mul(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quat operator*(const Quat& a, const Quat& b) { return mul(a, b); }

// Inverse of a unit quaternion.
inline Quat inverse(const Quat& q) { return q.conjugate(); }

// Embed a sphere point as a pure quaternion.
inline Quat pure(const Vec3& v) { return {0.0, v.x, v.y, v.z}; }

// g v g^-1 for unit g: rotation of v by the SO(3) image of g.
inline Vec3 conj_action(const Quat& g, const Vec3& v) {
    const Quat r = mul(mul(g, pure(v)), g.conjugate());
    return r.vec();
}

// p v p^-1 for a pure unit quaternion p: half-turn about p,
// p v p^-1 = 2 (p.v) p - v.
inline Vec3 half_turn(const Vec3& p, const Vec3& v) {
    const double d = 2.0 * p.dot(v);
    return {d * p.x - v.x, d * p.y - v.y, d * p.z - v.z};
}

// The theta-family of trace-free elements used for 2-strand braids:
// from_polar(theta) = cos(theta) e3 + sin(theta) e1, so from_polar(0) = e3.
inline Vec3 from_polar(double theta) { return {std::sin(theta), 0.0, std::cos(theta)}; }

// Polar angle in the xz-plane measured from e3, in (-pi, pi].
inline double polar_angle(const Vec3& v) { return std::atan2(v.x, v.z); }

inline Vec3 e1() { return {1.0, 0.0, 0.0}; }
inline Vec3 e2() { return {0.0, 1.0, 0.0}; }
inline Vec3 e3() { return {0.0, 0.0, 1.0}; }

}  // namespace cassonlin
