#pragma once

#include <optional>

#include "dqdyn/chain.hpp"

namespace dqdyn {

/// CoM twists and their time derivatives from the forward sweep, both
/// expressed in the respective CoM frame.
struct TwistSet {
    std::vector<Twist> xi;      // xi_{0,c_i}^{c_i}
    std::vector<Twist> xi_dot;  // d/dt of the above
};

/// Joint wrenches zeta_{j_i}^{i-1} from the backward sweep, expressed in
/// frame i-1.
struct WrenchSet {
    std::vector<Wrench> joint_wrench;
};

/// Operation tallies split the way the cost model charges the algorithm:
/// the three recursion phases count exactly their recurrence algebra, and
/// everything else (joint twist construction, gravity re-expression, wrench
/// projection) lands in `overhead`.
struct NePhaseCounters {
    OpCounter fkine;
    OpCounter twists;
    OpCounter twist_derivatives;
    OpCounter wrenches;
    OpCounter overhead;
};

TwistSet forward_recursion(const SerialChain& chain, const KinematicState& state,
                           const Eigen::VectorXd& q, const Eigen::VectorXd& qdot,
                           const Eigen::VectorXd& qddot, NePhaseCounters* phases = nullptr);

/// Convenience overload running its own forward kinematics.
TwistSet forward_recursion(const SerialChain& chain, const Eigen::VectorXd& q,
                           const Eigen::VectorXd& qdot, const Eigen::VectorXd& qddot);

WrenchSet backward_recursion(const SerialChain& chain, const KinematicState& state,
                             const TwistSet& twists,
                             const std::optional<Wrench>& external_wrench = std::nullopt,
                             NePhaseCounters* phases = nullptr);

/// Full inverse dynamics pass: one fkine, forward sweep, backward sweep.
/// The optional external wrench is expressed in frame n and seeds the
/// backward recursion.
WrenchSet newton_euler(const SerialChain& chain, const Eigen::VectorXd& q,
                       const Eigen::VectorXd& qdot, const Eigen::VectorXd& qddot,
                       const std::optional<Wrench>& external_wrench = std::nullopt,
                       NePhaseCounters* phases = nullptr);

/// Projects the joint wrenches onto the motion axes: the dual part of the
/// inner product for revolute joints, the primary part for prismatic ones,
/// the declared projection for custom joints.
Eigen::VectorXd project_wrenches(const SerialChain& chain, const WrenchSet& wrenches,
                                 const Eigen::VectorXd& q);

/// newton_euler followed by project_wrenches.
Eigen::VectorXd inverse_dynamics_ne(const SerialChain& chain, const Eigen::VectorXd& q,
                                    const Eigen::VectorXd& qdot, const Eigen::VectorXd& qddot,
                                    const std::optional<Wrench>& external_wrench = std::nullopt);

}  // namespace dqdyn
