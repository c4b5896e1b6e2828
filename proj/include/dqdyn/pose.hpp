#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "dqdyn/dual_quaternion.hpp"

namespace dqdyn {

inline constexpr double kPoseCleanTol = 1e-12;   // accept as-is below this defect
inline constexpr double kPoseRenormTol = 1e-6;   // renormalize up to this defect
inline constexpr double kPurityTol = 1e-12;      // real-part residue absorbed on construction

/// Dual scalar a + eps b, the value type of the twist/wrench inner product.
struct DualScalar {
    double re = 0.0;
    double du = 0.0;
};

/// Pure dual quaternion: both real parts are exactly zero. Carries twists
/// (angular + eps linear velocity) and wrenches (force + eps torque).
/// Construction absorbs real-part residues up to 1e-12 and rejects anything
/// larger.
class PureDualQuaternion {
  public:
    PureDualQuaternion() = default;

    explicit PureDualQuaternion(const DualQuaternion& h) : value_(h) {
        const double residue = std::max(std::abs(value_.p.w), std::abs(value_.d.w));
        if (residue > kPurityTol)
            throw std::domain_error("PureDualQuaternion: real-part residue " +
                                    std::to_string(residue) + " exceeds tolerance");
        value_.p.w = 0.0;
        value_.d.w = 0.0;
    }

    PureDualQuaternion(const Quaternion& primary, const Quaternion& dual)
        : PureDualQuaternion(DualQuaternion{primary, dual}) {}

    static PureDualQuaternion zero() { return {}; }

    const DualQuaternion& dq() const { return value_; }
    const Quaternion& primary() const { return value_.p; }
    const Quaternion& dual() const { return value_.d; }

  private:
    DualQuaternion value_;
};

using Twist = PureDualQuaternion;   // omega + eps v
using Wrench = PureDualQuaternion;  // f + eps tau

inline PureDualQuaternion operator+(const PureDualQuaternion& a, const PureDualQuaternion& b) {
    return PureDualQuaternion{dq_add(a.dq(), b.dq())};
}
inline PureDualQuaternion operator-(const PureDualQuaternion& a, const PureDualQuaternion& b) {
    return PureDualQuaternion{dq_sub(a.dq(), b.dq())};
}
inline PureDualQuaternion operator*(double s, const PureDualQuaternion& a) {
    return PureDualQuaternion{dq_scale(s, a.dq())};
}
inline PureDualQuaternion operator-(const PureDualQuaternion& a) {
    return PureDualQuaternion{-a.dq()};
}

/// Unit dual quaternion x = r + eps (1/2) p r representing a rigid
/// transformation. Construction renormalizes small drift (unit defect in
/// (1e-12, 1e-6]) and rejects larger defects as logic errors.
class Pose {
  public:
    Pose() : value_(DualQuaternion::one()) {}

    explicit Pose(const DualQuaternion& h) : value_(h) {
        const double pn = value_.p.norm();
        const double defect = std::max(std::abs(pn - 1.0), std::abs(pd_dot()));
        if (defect <= kPoseCleanTol) return;
        if (defect > kPoseRenormTol)
            throw std::domain_error("Pose: unit defect " + std::to_string(defect) +
                                    " exceeds tolerance");
        // h / ||h|| with the dual-number norm |P| + eps <P,D>/|P|.
        const double inv = 1.0 / pn;
        const double pd = pd_dot() * inv * inv;
        const Quaternion p_unit = quat_scale(inv, value_.p);
        value_ = {p_unit, quat_sub(quat_scale(inv, value_.d), quat_scale(pd, p_unit))};
    }

    static Pose identity() { return {}; }

    /// Rotation about a unit axis by angle (radians).
    static Pose rotation(double angle, const Quaternion& axis) {
        const double h = 0.5 * angle;
        return Pose{DualQuaternion{quat_add(Quaternion{std::cos(h), 0, 0, 0},
                                            quat_scale(std::sin(h), axis)),
                                   Quaternion::zero()}};
    }

    /// Translation by a pure quaternion p.
    static Pose translation(const Quaternion& p) {
        return Pose{DualQuaternion{Quaternion::one(), quat_scale(0.5, p)}};
    }

    static Pose from_rotation_translation(const Quaternion& r, const Quaternion& p) {
        return Pose{DualQuaternion{r, quat_scale(0.5, quat_mul(p, r))}};
    }

    const DualQuaternion& dq() const { return value_; }
    const Quaternion& rotation_part() const { return value_.p; }

    /// Translation p = 2 D(x) P(x)*.
    Quaternion translation_part() const {
        return quat_scale(2.0, quat_mul(value_.d, quat_conj(value_.p)));
    }

    Pose conj() const {
        Pose out;
        out.value_ = dq_conj(value_);
        return out;
    }

  private:
    double pd_dot() const {
        return value_.p.w * value_.d.w + value_.p.x * value_.d.x + value_.p.y * value_.d.y +
               value_.p.z * value_.d.z;
    }

    DualQuaternion value_;
};

inline Pose operator*(const Pose& a, const Pose& b) { return Pose{dq_mul(a.dq(), b.dq())}; }

/// Ad(x) h = x h x*. The result of transforming a pure element is pure; the
/// real parts are zeroed after the product to keep round-off out of them.
inline PureDualQuaternion adjoint(const Pose& x, const PureDualQuaternion& h,
                                  OpCounter* c = nullptr) {
    DualQuaternion out = dq_adjoint(x.dq(), h.dq(), c);
    out.p.w = 0.0;
    out.d.w = 0.0;
    return PureDualQuaternion{out};
}

/// Cross product of pure dual quaternions, (ab - ba)/2.
inline PureDualQuaternion cross(const PureDualQuaternion& a, const PureDualQuaternion& b,
                                OpCounter* c = nullptr) {
    DualQuaternion out = dq_cross(a.dq(), b.dq(), c);
    out.p.w = 0.0;
    out.d.w = 0.0;
    return PureDualQuaternion{out};
}

/// Inner product -(ab + ba)/2 of pure dual quaternions:
/// <P(a),P(b)> + eps <D(a),D(b)>.
inline DualScalar dot(const PureDualQuaternion& a, const PureDualQuaternion& b,
                      OpCounter* c = nullptr) {
    const DualQuaternion m =
        dq_scale(-0.5, dq_add(dq_mul(a.dq(), b.dq(), c), dq_mul(b.dq(), a.dq(), c), c), c);
    return {m.p.w, m.d.w};
}

/// Rotate a pure quaternion v by a unit quaternion r (r v r*), zeroing the
/// real-part residue.
inline Quaternion rotate(const Quaternion& r, const Quaternion& v, OpCounter* c = nullptr) {
    Quaternion out = quat_adjoint(r, v, c);
    out.w = 0.0;
    return out;
}

}  // namespace dqdyn
