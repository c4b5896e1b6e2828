#pragma once

#include "dqdyn/quaternion.hpp"

namespace dqdyn {

/// Dual quaternion p + eps d with eps^2 = 0; p is the primary part, d the
/// dual part. Products therefore satisfy
///   (a.p + eps a.d)(b.p + eps b.d) = a.p b.p + eps (a.p b.d + a.d b.p).
struct DualQuaternion {
    Quaternion p;
    Quaternion d;

    constexpr DualQuaternion() = default;
    constexpr DualQuaternion(const Quaternion& primary, const Quaternion& dual)
        : p(primary), d(dual) {}

    static constexpr DualQuaternion zero() { return {}; }
    static constexpr DualQuaternion one() { return {Quaternion::one(), Quaternion::zero()}; }

    bool is_pure(double tol = 0.0) const { return p.is_pure(tol) && d.is_pure(tol); }
};

inline DualQuaternion dq_mul(const DualQuaternion& a, const DualQuaternion& b,
                             OpCounter* c = nullptr) {
    return {quat_mul(a.p, b.p, c),
            quat_add(quat_mul(a.p, b.d, c), quat_mul(a.d, b.p, c), c)};
}

inline DualQuaternion dq_add(const DualQuaternion& a, const DualQuaternion& b,
                             OpCounter* c = nullptr) {
    return {quat_add(a.p, b.p, c), quat_add(a.d, b.d, c)};
}

inline DualQuaternion dq_sub(const DualQuaternion& a, const DualQuaternion& b,
                             OpCounter* c = nullptr) {
    return {quat_sub(a.p, b.p, c), quat_sub(a.d, b.d, c)};
}

inline DualQuaternion dq_scale(double s, const DualQuaternion& a, OpCounter* c = nullptr) {
    return {quat_scale(s, a.p, c), quat_scale(s, a.d, c)};
}

inline DualQuaternion dq_conj(const DualQuaternion& a, OpCounter* c = nullptr) {
    return {quat_conj(a.p, c), quat_conj(a.d, c)};
}

/// Cross product (ab - ba)/2 of pure dual quaternions.
inline DualQuaternion dq_cross(const DualQuaternion& a, const DualQuaternion& b,
                               OpCounter* c = nullptr) {
    return dq_scale(0.5, dq_sub(dq_mul(a, b, c), dq_mul(b, a, c), c), c);
}

/// Rigid transformation a b a* by a unit dual quaternion a.
inline DualQuaternion dq_adjoint(const DualQuaternion& a, const DualQuaternion& b,
                                 OpCounter* c = nullptr) {
    return dq_mul(dq_mul(a, b, c), dq_conj(a, c), c);
}

inline DualQuaternion operator*(const DualQuaternion& a, const DualQuaternion& b) {
    return dq_mul(a, b);
}
inline DualQuaternion operator+(const DualQuaternion& a, const DualQuaternion& b) {
    return dq_add(a, b);
}
inline DualQuaternion operator-(const DualQuaternion& a, const DualQuaternion& b) {
    return dq_sub(a, b);
}
inline DualQuaternion operator*(double s, const DualQuaternion& a) { return dq_scale(s, a); }
inline DualQuaternion operator-(const DualQuaternion& a) { return {-a.p, -a.d}; }

inline bool operator==(const DualQuaternion& a, const DualQuaternion& b) {
    return a.p == b.p && a.d == b.d;
}

inline std::ostream& operator<<(std::ostream& os, const DualQuaternion& h) {
    return os << h.p << " + eps " << h.d;
}

}  // namespace dqdyn
