#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "dqdyn/pose.hpp"

namespace dqdyn {

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat8 = Eigen::Matrix<double, 8, 8>;

/// Coefficients in order (1, i, j, k), primary part then dual part.
inline Vec8 vec8(const DualQuaternion& h) {
    Vec8 v;
    v << h.p.w, h.p.x, h.p.y, h.p.z, h.d.w, h.d.x, h.d.y, h.d.z;
    return v;
}

inline Vec3 vec3(const Quaternion& q) {
    if (!q.is_pure(kPurityTol))
        throw std::domain_error("vec3: quaternion is not pure");
    return {q.x, q.y, q.z};
}

inline Vec6 vec6(const PureDualQuaternion& h) {
    Vec6 v;
    v << h.primary().x, h.primary().y, h.primary().z, h.dual().x, h.dual().y, h.dual().z;
    return v;
}

inline DualQuaternion dq_from_vec8(const Vec8& v) {
    return {Quaternion{v[0], v[1], v[2], v[3]}, Quaternion{v[4], v[5], v[6], v[7]}};
}

inline Quaternion quat_from_vec3(const Vec3& v) { return Quaternion::pure(v[0], v[1], v[2]); }

inline PureDualQuaternion pure_from_vec6(const Vec6& v) {
    return {Quaternion::pure(v[0], v[1], v[2]), Quaternion::pure(v[3], v[4], v[5])};
}

/// 6x8 selector deleting rows 1 and 5: vec6(h) = ibar() * vec8(h) for pure h.
inline Eigen::Matrix<double, 6, 8> ibar() {
    Eigen::Matrix<double, 6, 8> m = Eigen::Matrix<double, 6, 8>::Zero();
    m.block<3, 3>(0, 1).setIdentity();
    m.block<3, 3>(3, 5).setIdentity();
    return m;
}

/// 4x4 matrix of left multiplication: vec4(a b) = hamilton_plus_4(a) vec4(b).
inline Mat4 hamilton_plus_4(const Quaternion& a) {
    Mat4 m;
    m << a.w, -a.x, -a.y, -a.z,
         a.x,  a.w, -a.z,  a.y,
         a.y,  a.z,  a.w, -a.x,
         a.z, -a.y,  a.x,  a.w;
    return m;
}

/// 8x8 matrix of left multiplication: vec8(h1 h2) = hamilton_plus_8(h1) vec8(h2).
inline Mat8 hamilton_plus_8(const DualQuaternion& h) {
    Mat8 m = Mat8::Zero();
    const Mat4 hp = hamilton_plus_4(h.p);
    m.block<4, 4>(0, 0) = hp;
    m.block<4, 4>(4, 4) = hp;
    m.block<4, 4>(4, 0) = hamilton_plus_4(h.d);
    return m;
}

/// M3(A) h: applies a 3x3 matrix to the coefficients of a pure quaternion.
/// 9 multiplications, 6 additions.
inline Quaternion m3_apply(const Mat3& a, const Quaternion& h, OpCounter* c = nullptr) {
    if (!h.is_pure(kPurityTol))
        throw std::domain_error("m3_apply: quaternion is not pure");
    tally(c, 9, 6);
    return Quaternion::pure(a(0, 0) * h.x + a(0, 1) * h.y + a(0, 2) * h.z,
                            a(1, 0) * h.x + a(1, 1) * h.y + a(1, 2) * h.z,
                            a(2, 0) * h.x + a(2, 1) * h.y + a(2, 2) * h.z);
}

}  // namespace dqdyn
