#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dqdyn/vectorize.hpp"

namespace dqdyn {

enum class JointKind { revolute, prismatic, custom };

/// User-defined joint. The motion x(q) is the unit dual quaternion inserted
/// between frame i-1 and the fixed part of the link transform, and the
/// generator g(q) is the screw axis of that motion in frame i-1, so that the
/// joint twist is qdot * g(q) and d/dt x(q) = (1/2)(qdot g(q)) x(q).
/// generator_rate is dg/dq; no numeric differentiation happens inside the
/// library. projection maps the joint wrench (expressed in frame i-1) to the
/// generalized force; it must be supplied before project_wrenches is called
/// on a chain containing the joint.
struct CustomJoint {
    std::function<Pose(double)> motion;
    std::function<PureDualQuaternion(double)> generator;
    std::function<PureDualQuaternion(double)> generator_rate;
    std::function<double(const Wrench&, double q)> projection;
};

struct JointModel {
    JointKind kind = JointKind::revolute;
    Quaternion axis = Quaternion::k();  // motion axis in frame i-1, unit pure
    std::shared_ptr<const CustomJoint> custom;

    static JointModel revolute(const Quaternion& axis = Quaternion::k());
    static JointModel prismatic(const Quaternion& axis = Quaternion::k());
    static JointModel make_custom(CustomJoint joint);
};

/// Standard Denavit-Hartenberg row (theta, d, a, alpha); the joint variable
/// adds to theta for revolute joints and to d for prismatic ones.
struct DhRow {
    double theta = 0.0;
    double d = 0.0;
    double a = 0.0;
    double alpha = 0.0;
};

struct LinkParams {
    DhRow dh;
    double mass = 0.0;
    Pose com_pose;  // pose of the CoM frame in the link frame, constant
    Mat3 inertia = Mat3::Identity();  // at the CoM, in the CoM frame
};

/// Ordered links of a serial manipulator plus the gravity acceleration
/// vector in the inertial frame. Immutable after construction; construction
/// validates every link (unit axis, positive mass, symmetric positive
/// definite inertia) and reports the offending link index.
class SerialChain {
  public:
    SerialChain(std::vector<JointModel> joints, std::vector<LinkParams> links,
                Quaternion gravity = Quaternion::pure(0.0, 0.0, -9.81));

    int size() const { return static_cast<int>(links_.size()); }
    const JointModel& joint(int i) const { return joints_[static_cast<size_t>(i)]; }
    const LinkParams& link(int i) const { return links_[static_cast<size_t>(i)]; }
    const Quaternion& gravity() const { return gravity_; }

    /// Conjugate of link i's CoM offset, x_i^{c_i}, cached at load time.
    const Pose& com_pose_conj(int i) const { return com_conj_[static_cast<size_t>(i)]; }

  private:
    std::vector<JointModel> joints_;
    std::vector<LinkParams> links_;
    std::vector<Pose> com_conj_;
    Quaternion gravity_;
};

/// Poses produced by one forward-kinematics pass. Indexing is 1-based for
/// links to follow the chain convention c_0 = 0; entry 0 of frame_world is
/// the identity. The relative transforms are the ones consumed by the
/// Newton-Euler sweeps.
struct KinematicState {
    std::vector<Pose> frame_world;       // x_i^0, i = 0..n
    std::vector<Pose> com_world;         // x_{c_i}^0, i = 1..n (slot 0 = identity)
    std::vector<Pose> dh_pose;           // x_i^{i-1}, function of q_i
    std::vector<Pose> com_in_prev;       // x_{c_i}^{i-1}
    std::vector<Pose> prev_frame_in_com; // x_{i-1}^{c_i}
    std::vector<Pose> prev_com_in_com;   // x_{c_{i-1}}^{c_i}
};

/// Forward kinematics to every joint frame and center of mass.
KinematicState fkine(const SerialChain& chain, const Eigen::VectorXd& q,
                     OpCounter* counter = nullptr);

/// Twist of frame c_i relative to frame i-1, expressed in frame i-1:
/// qdot * l for a revolute joint, eps qdot * l for a prismatic one.
Twist joint_twist(const JointModel& j, double q, double qdot);

/// Total time derivative of the joint twist.
Twist joint_twist_derivative(const JointModel& j, double q, double qdot, double qddot);

/// Screw generator of joint i expressed in frame i-1 (l, eps l, or the
/// custom generator at q).
PureDualQuaternion joint_generator(const JointModel& j, double q);

/// Everything the differential kinematics produces for one (q, qdot):
/// per-link 8xi pose Jacobians and their time derivatives, plus the 6xn
/// zero-padded twist Jacobians J and Jdot of the CoM twists.
struct ChainJacobians {
    KinematicState state;
    std::vector<Eigen::MatrixXd> pose_jac;       // J_{x_{c_i}^0}, 8 x i
    std::vector<Eigen::MatrixXd> pose_jac_dot;   // d/dt of the above
    std::vector<Eigen::MatrixXd> twist_jac;      // J_{xi_i}, 6 x n, columns > i zero
    std::vector<Eigen::MatrixXd> twist_jac_dot;  // d/dt of the above
};

ChainJacobians chain_jacobians(const SerialChain& chain, const Eigen::VectorXd& q,
                               const Eigen::VectorXd& qdot);

/// Individual pieces, for callers that need only one of them.
std::vector<Eigen::MatrixXd> pose_jacobian(const SerialChain& chain, const Eigen::VectorXd& q);
std::vector<Eigen::MatrixXd> pose_jacobian_derivative(const SerialChain& chain,
                                                      const Eigen::VectorXd& q,
                                                      const Eigen::VectorXd& qdot);
std::vector<Eigen::MatrixXd> twist_jacobian(const SerialChain& chain, const Eigen::VectorXd& q);
std::vector<Eigen::MatrixXd> twist_jacobian_derivative(const SerialChain& chain,
                                                       const Eigen::VectorXd& q,
                                                       const Eigen::VectorXd& qdot);

}  // namespace dqdyn
