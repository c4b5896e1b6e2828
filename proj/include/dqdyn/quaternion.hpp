#pragma once

#include <cmath>
#include <iosfwd>
#include <ostream>

#include "dqdyn/op_counter.hpp"

namespace dqdyn {

/// Quaternion w + x i + y j + z k over doubles, with i^2 = j^2 = k^2 = ijk = -1.
/// Coefficient storage order is (w, x, y, z) everywhere in this library.
///
/// The arithmetic kernels are deliberately the plain schoolbook forms (the
/// Hamilton product is 16 multiplies and 12 additions, no factoring), so an
/// attached OpCounter reports the textbook operation counts.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    /// Pure quaternion x i + y j + z k.
    static constexpr Quaternion pure(double x_, double y_, double z_) {
        return {0.0, x_, y_, z_};
    }

    bool is_pure(double tol = 0.0) const { return std::abs(w) <= tol; }

    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
};

/// Hamilton product, 16 multiplications and 12 additions.
inline Quaternion quat_mul(const Quaternion& a, const Quaternion& b, OpCounter* c = nullptr) {
    tally(c, 16, 12);
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quaternion quat_add(const Quaternion& a, const Quaternion& b, OpCounter* c = nullptr) {
    tally(c, 0, 4);
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

inline Quaternion quat_sub(const Quaternion& a, const Quaternion& b, OpCounter* c = nullptr) {
    tally(c, 0, 4);
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

inline Quaternion quat_scale(double s, const Quaternion& a, OpCounter* c = nullptr) {
    tally(c, 4, 0);
    return {s * a.w, s * a.x, s * a.y, s * a.z};
}

/// Conjugate; the three sign flips count as multiplications.
inline Quaternion quat_conj(const Quaternion& a, OpCounter* c = nullptr) {
    tally(c, 3, 0);
    return {a.w, -1.0 * a.x, -1.0 * a.y, -1.0 * a.z};
}

/// Cross product of pure quaternions, (ab - ba)/2.
inline Quaternion quat_cross(const Quaternion& a, const Quaternion& b, OpCounter* c = nullptr) {
    return quat_scale(0.5, quat_sub(quat_mul(a, b, c), quat_mul(b, a, c), c), c);
}

/// Inner product of pure quaternions.
inline double quat_dot(const Quaternion& a, const Quaternion& b, OpCounter* c = nullptr) {
    tally(c, 3, 2);
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Rigid transformation a b a* of a pure quaternion b by a unit quaternion a.
inline Quaternion quat_adjoint(const Quaternion& a, const Quaternion& b, OpCounter* c = nullptr) {
    return quat_mul(quat_mul(a, b, c), quat_conj(a, c), c);
}

inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return quat_mul(a, b); }
inline Quaternion operator+(const Quaternion& a, const Quaternion& b) { return quat_add(a, b); }
inline Quaternion operator-(const Quaternion& a, const Quaternion& b) { return quat_sub(a, b); }
inline Quaternion operator*(double s, const Quaternion& a) { return quat_scale(s, a); }
inline Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }

inline bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

}  // namespace dqdyn
