#pragma once

#include <array>

#include <Eigen/Dense>

namespace dqdyn {

/// Parameters of a planar 2R arm: link masses, first link length, CoM
/// distances along each link, rotational inertias about the CoM, and the
/// gravity magnitude (pulling along -y of the plane).
struct TwoLinkParams {
    double m1 = 1.0;
    double m2 = 1.0;
    double l1 = 1.0;
    double lc1 = 0.5;
    double lc2 = 0.5;
    double inertia1 = 0.1;
    double inertia2 = 0.1;
    double gravity = 9.81;
};

/// Closed-form joint torques of the planar 2R arm, from the Lagrangian of
/// the two-body system. Serves as the analytical baseline the dual
/// quaternion methods are validated against; it shares no code with them.
std::array<double, 2> analytical_two_link(const TwoLinkParams& p, const Eigen::Vector2d& q,
                                          const Eigen::Vector2d& qdot,
                                          const Eigen::Vector2d& qddot);

/// The pieces of the closed form, exposed for tests.
Eigen::Matrix2d two_link_inertia(const TwoLinkParams& p, const Eigen::Vector2d& q);
Eigen::Matrix2d two_link_coriolis(const TwoLinkParams& p, const Eigen::Vector2d& q,
                                  const Eigen::Vector2d& qdot);
Eigen::Vector2d two_link_gravity(const TwoLinkParams& p, const Eigen::Vector2d& q);

}  // namespace dqdyn
