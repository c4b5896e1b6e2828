#include "dqdyn/two_link.hpp"

#include <cmath>

namespace dqdyn {

// Standard planar 2R Euler-Lagrange model with angles measured from the +x
// axis, rotation about z, gravity of magnitude g along -y:
//   M11 = m1 lc1^2 + I1 + m2 (l1^2 + lc2^2 + 2 l1 lc2 cos q2) + I2
//   M12 = m2 (lc2^2 + l1 lc2 cos q2) + I2,  M22 = m2 lc2^2 + I2
//   C   = h [ qd2, qd1 + qd2; -qd1, 0 ],   h = -m2 l1 lc2 sin q2
//   g1  = (m1 lc1 + m2 l1) g cos q1 + m2 lc2 g cos(q1 + q2)
//   g2  = m2 lc2 g cos(q1 + q2)

Eigen::Matrix2d two_link_inertia(const TwoLinkParams& p, const Eigen::Vector2d& q) {
    const double c2 = std::cos(q[1]);
    Eigen::Matrix2d m;
    m(0, 0) = p.m1 * p.lc1 * p.lc1 + p.inertia1 +
              p.m2 * (p.l1 * p.l1 + p.lc2 * p.lc2 + 2.0 * p.l1 * p.lc2 * c2) + p.inertia2;
    m(0, 1) = p.m2 * (p.lc2 * p.lc2 + p.l1 * p.lc2 * c2) + p.inertia2;
    m(1, 0) = m(0, 1);
    m(1, 1) = p.m2 * p.lc2 * p.lc2 + p.inertia2;
    return m;
}

Eigen::Matrix2d two_link_coriolis(const TwoLinkParams& p, const Eigen::Vector2d& q,
                                  const Eigen::Vector2d& qdot) {
    const double h = -p.m2 * p.l1 * p.lc2 * std::sin(q[1]);
    Eigen::Matrix2d c;
    c(0, 0) = h * qdot[1];
    c(0, 1) = h * (qdot[0] + qdot[1]);
    c(1, 0) = -h * qdot[0];
    c(1, 1) = 0.0;
    return c;
}

Eigen::Vector2d two_link_gravity(const TwoLinkParams& p, const Eigen::Vector2d& q) {
    const double c1 = std::cos(q[0]);
    const double c12 = std::cos(q[0] + q[1]);
    return {(p.m1 * p.lc1 + p.m2 * p.l1) * p.gravity * c1 + p.m2 * p.lc2 * p.gravity * c12,
            p.m2 * p.lc2 * p.gravity * c12};
}

std::array<double, 2> analytical_two_link(const TwoLinkParams& p, const Eigen::Vector2d& q,
                                          const Eigen::Vector2d& qdot,
                                          const Eigen::Vector2d& qddot) {
    const Eigen::Vector2d tau = two_link_inertia(p, q) * qddot +
                                two_link_coriolis(p, q, qdot) * qdot + two_link_gravity(p, q);
    return {tau[0], tau[1]};
}

}  // namespace dqdyn
