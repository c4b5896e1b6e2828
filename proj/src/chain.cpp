#include "dqdyn/chain.hpp"

#include <cmath>
#include <stdexcept>

namespace dqdyn {

namespace {

void check_finite(const Eigen::VectorXd& v, const char* what) {
    if (!v.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

void check_size(const SerialChain& chain, const Eigen::VectorXd& v, const char* what) {
    if (v.size() != chain.size())
        throw std::invalid_argument(std::string(what) + ": expected length " +
                                    std::to_string(chain.size()));
    check_finite(v, what);
}

/// Joint motion transform: rotation (or translation) by q about the joint
/// axis, in frame i-1.
Pose joint_motion(const JointModel& j, double q) {
    switch (j.kind) {
        case JointKind::revolute:
            return Pose::rotation(q, j.axis);
        case JointKind::prismatic:
            return Pose::translation(quat_scale(q, j.axis));
        case JointKind::custom:
            return j.custom->motion(q);
    }
    throw std::logic_error("joint_motion: bad kind");
}

/// Fixed part of the DH transform, RotZ(theta) TransZ(d) TransX(a) RotX(alpha).
Pose dh_fixed(const DhRow& dh) {
    const Pose rz = Pose::rotation(dh.theta, Quaternion::k());
    const Pose tz = Pose::translation(Quaternion::pure(0.0, 0.0, dh.d));
    const Pose tx = Pose::translation(Quaternion::pure(dh.a, 0.0, 0.0));
    const Pose rx = Pose::rotation(dh.alpha, Quaternion::i());
    return rz * tz * tx * rx;
}

}  // namespace

JointModel JointModel::revolute(const Quaternion& axis) {
    return {JointKind::revolute, axis, nullptr};
}

JointModel JointModel::prismatic(const Quaternion& axis) {
    return {JointKind::prismatic, axis, nullptr};
}

JointModel JointModel::make_custom(CustomJoint joint) {
    if (!joint.motion || !joint.generator || !joint.generator_rate)
        throw std::invalid_argument(
            "custom joint: motion, generator, and generator_rate are required");
    JointModel m;
    m.kind = JointKind::custom;
    m.custom = std::make_shared<const CustomJoint>(std::move(joint));
    return m;
}

SerialChain::SerialChain(std::vector<JointModel> joints, std::vector<LinkParams> links,
                         Quaternion gravity)
    : joints_(std::move(joints)), links_(std::move(links)), gravity_(gravity) {
    if (links_.empty()) throw std::invalid_argument("SerialChain: at least one link required");
    if (joints_.size() != links_.size())
        throw std::invalid_argument("SerialChain: joints/links size mismatch");
    if (std::abs(gravity_.w) > kPurityTol)
        throw std::invalid_argument("SerialChain: gravity must be a pure quaternion");

    for (size_t i = 0; i < links_.size(); ++i) {
        const std::string where = "link " + std::to_string(i + 1);
        const JointModel& j = joints_[i];
        if (j.kind != JointKind::custom) {
            if (std::abs(j.axis.w) > kPurityTol)
                throw std::invalid_argument(where + ": joint axis must be pure");
            if (std::abs(j.axis.norm() - 1.0) > kPurityTol)
                throw std::invalid_argument(where + ": joint axis must have unit norm");
        } else if (!j.custom) {
            throw std::invalid_argument(where + ": custom joint without callbacks");
        }

        const LinkParams& l = links_[i];
        if (!(l.mass > 0.0)) throw std::invalid_argument(where + ": mass must be positive");
        if ((l.inertia - l.inertia.transpose()).cwiseAbs().maxCoeff() > 1e-12)
            throw std::invalid_argument(where + ": inertia tensor must be symmetric");
        Eigen::SelfAdjointEigenSolver<Mat3> es(l.inertia);
        if (es.eigenvalues().minCoeff() <= 0.0)
            throw std::invalid_argument(where + ": inertia tensor must be positive definite");
        com_conj_.push_back(l.com_pose.conj());
    }
}

KinematicState fkine(const SerialChain& chain, const Eigen::VectorXd& q, OpCounter* counter) {
    check_size(chain, q, "fkine: q");
    const int n = chain.size();

    KinematicState s;
    s.frame_world.resize(static_cast<size_t>(n) + 1);
    s.com_world.resize(static_cast<size_t>(n) + 1);
    s.dh_pose.resize(static_cast<size_t>(n) + 1);
    s.com_in_prev.resize(static_cast<size_t>(n) + 1);
    s.prev_frame_in_com.resize(static_cast<size_t>(n) + 1);
    s.prev_com_in_com.resize(static_cast<size_t>(n) + 1);

    s.frame_world[0] = Pose::identity();
    s.com_world[0] = Pose::identity();  // c_0 = 0

    for (int i = 1; i <= n; ++i) {
        const JointModel& joint = chain.joint(i - 1);
        const LinkParams& link = chain.link(i - 1);

        // x_i^{i-1} = motion(q_i) * fixed DH part
        Pose x_rel{dq_mul(joint_motion(joint, q[i - 1]).dq(), dh_fixed(link.dh).dq(), counter)};
        s.dh_pose[i] = x_rel;

        s.frame_world[i] = Pose{dq_mul(s.frame_world[i - 1].dq(), x_rel.dq(), counter)};
        s.com_world[i] = Pose{dq_mul(s.frame_world[i].dq(), link.com_pose.dq(), counter)};
        s.com_in_prev[i] = Pose{dq_mul(x_rel.dq(), link.com_pose.dq(), counter)};
        s.prev_frame_in_com[i] = Pose{dq_conj(s.com_in_prev[i].dq(), counter)};
        // x_{c_{i-1}}^{c_i} = x_{i-1}^{c_i} x_{c_{i-1}}^{i-1}; the second
        // factor is the CoM offset of the previous link (constant), and for
        // i = 1 it is the identity because c_0 = 0.
        const Pose prev_com_in_prev =
            (i == 1) ? Pose::identity() : chain.link(i - 2).com_pose;
        s.prev_com_in_com[i] =
            Pose{dq_mul(s.prev_frame_in_com[i].dq(), prev_com_in_prev.dq(), counter)};
    }
    return s;
}

Twist joint_twist(const JointModel& j, double q, double qdot) {
    if (!std::isfinite(q) || !std::isfinite(qdot))
        throw std::invalid_argument("joint_twist: non-finite input");
    switch (j.kind) {
        case JointKind::revolute:
            return {quat_scale(qdot, j.axis), Quaternion::zero()};
        case JointKind::prismatic:
            return {Quaternion::zero(), quat_scale(qdot, j.axis)};
        case JointKind::custom:
            return PureDualQuaternion{dq_scale(qdot, j.custom->generator(q).dq())};
    }
    throw std::logic_error("joint_twist: bad kind");
}

Twist joint_twist_derivative(const JointModel& j, double q, double qdot, double qddot) {
    if (!std::isfinite(q) || !std::isfinite(qdot) || !std::isfinite(qddot))
        throw std::invalid_argument("joint_twist_derivative: non-finite input");
    switch (j.kind) {
        case JointKind::revolute:
            return {quat_scale(qddot, j.axis), Quaternion::zero()};
        case JointKind::prismatic:
            return {Quaternion::zero(), quat_scale(qddot, j.axis)};
        case JointKind::custom:
            // d/dt (qdot g(q)) = qddot g + qdot^2 dg/dq
            return PureDualQuaternion{
                dq_add(dq_scale(qddot, j.custom->generator(q).dq()),
                       dq_scale(qdot * qdot, j.custom->generator_rate(q).dq()))};
    }
    throw std::logic_error("joint_twist_derivative: bad kind");
}

PureDualQuaternion joint_generator(const JointModel& j, double q) {
    switch (j.kind) {
        case JointKind::revolute:
            return {j.axis, Quaternion::zero()};
        case JointKind::prismatic:
            return {Quaternion::zero(), j.axis};
        case JointKind::custom:
            return j.custom->generator(q);
    }
    throw std::logic_error("joint_generator: bad kind");
}

namespace {

/// Shared core of the Jacobian construction. Column k of the pose Jacobian
/// of x_{c_i}^0 is (1/2) vec8(a_k x_{c_i}^0) where a_k = Ad(x_{k-1}^0) g_k is
/// the screw axis of joint k in world coordinates; the derivative columns
/// follow by the product rule with
///   da_k/dt = Ad(x_{k-1}^0)(qdot_k dg_k/dq) + xi_{0,k-1}^0 x a_k
/// (the adjoint-derivative identity) and d/dt x_{c_i}^0 = (1/2) xi_i^0 x_{c_i}^0.
struct JacobianWorkspace {
    std::vector<DualQuaternion> axis_world;      // a_k
    std::vector<DualQuaternion> axis_world_dot;  // da_k/dt (only when qdot given)
    std::vector<DualQuaternion> frame_twist;     // xi_{0,k}^0, prefix sums of qdot_k a_k
};

JacobianWorkspace jacobian_workspace(const SerialChain& chain, const KinematicState& s,
                                     const Eigen::VectorXd& q, const Eigen::VectorXd* qdot) {
    const int n = chain.size();
    JacobianWorkspace w;
    w.axis_world.resize(static_cast<size_t>(n));
    if (qdot != nullptr) {
        w.axis_world_dot.resize(static_cast<size_t>(n));
        w.frame_twist.resize(static_cast<size_t>(n) + 1, DualQuaternion::zero());
    }
    for (int k = 1; k <= n; ++k) {
        const PureDualQuaternion gen = joint_generator(chain.joint(k - 1), q[k - 1]);
        const DualQuaternion a = adjoint(s.frame_world[k - 1], gen).dq();
        w.axis_world[k - 1] = a;
        if (qdot == nullptr) continue;

        DualQuaternion gen_dot = DualQuaternion::zero();
        if (chain.joint(k - 1).kind == JointKind::custom)
            gen_dot = dq_scale((*qdot)[k - 1],
                               chain.joint(k - 1).custom->generator_rate(q[k - 1]).dq());
        const DualQuaternion a_dot =
            dq_add(dq_adjoint(s.frame_world[k - 1].dq(), gen_dot),
                   dq_cross(w.frame_twist[k - 1], a));
        w.axis_world_dot[k - 1] = a_dot;
        w.frame_twist[k] = dq_add(w.frame_twist[k - 1], dq_scale((*qdot)[k - 1], a));
    }
    return w;
}

}  // namespace

ChainJacobians chain_jacobians(const SerialChain& chain, const Eigen::VectorXd& q,
                               const Eigen::VectorXd& qdot) {
    check_size(chain, q, "chain_jacobians: q");
    check_size(chain, qdot, "chain_jacobians: qdot");
    const int n = chain.size();

    ChainJacobians out;
    out.state = fkine(chain, q);
    const JacobianWorkspace w = jacobian_workspace(chain, out.state, q, &qdot);

    out.pose_jac.resize(static_cast<size_t>(n));
    out.pose_jac_dot.resize(static_cast<size_t>(n));
    out.twist_jac.resize(static_cast<size_t>(n));
    out.twist_jac_dot.resize(static_cast<size_t>(n));
    const Eigen::Matrix<double, 6, 8> sel = ibar();

    for (int i = 1; i <= n; ++i) {
        const DualQuaternion& x = out.state.com_world[i].dq();
        // c_i rides on link i, so its world twist is the frame-i prefix sum
        const DualQuaternion& xi_world = w.frame_twist[static_cast<size_t>(i)];
        const DualQuaternion x_dot = dq_scale(0.5, dq_mul(xi_world, x));

        Eigen::MatrixXd J(8, i), Jdot(8, i);
        for (int k = 1; k <= i; ++k) {
            const DualQuaternion& a = w.axis_world[k - 1];
            J.col(k - 1) = 0.5 * vec8(dq_mul(a, x));
            Jdot.col(k - 1) =
                0.5 * vec8(dq_add(dq_mul(w.axis_world_dot[k - 1], x), dq_mul(a, x_dot)));
        }

        // J_xi = [2 Ibar H8(x_0^{c_i}) J | 0], and its time derivative uses
        // d/dt x_0^{c_i} = conj(d/dt x_{c_i}^0).
        const Mat8 h_conj = hamilton_plus_8(dq_conj(x));
        const Mat8 h_conj_dot = hamilton_plus_8(dq_conj(x_dot));
        Eigen::MatrixXd Jt = Eigen::MatrixXd::Zero(6, n);
        Eigen::MatrixXd Jt_dot = Eigen::MatrixXd::Zero(6, n);
        Jt.leftCols(i) = 2.0 * sel * h_conj * J;
        Jt_dot.leftCols(i) = 2.0 * sel * (h_conj_dot * J + h_conj * Jdot);

        out.pose_jac[i - 1] = std::move(J);
        out.pose_jac_dot[i - 1] = std::move(Jdot);
        out.twist_jac[i - 1] = std::move(Jt);
        out.twist_jac_dot[i - 1] = std::move(Jt_dot);
    }
    return out;
}

std::vector<Eigen::MatrixXd> pose_jacobian(const SerialChain& chain, const Eigen::VectorXd& q) {
    check_size(chain, q, "pose_jacobian: q");
    const int n = chain.size();
    const KinematicState s = fkine(chain, q);
    const JacobianWorkspace w = jacobian_workspace(chain, s, q, nullptr);

    std::vector<Eigen::MatrixXd> jac(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        Eigen::MatrixXd J(8, i);
        for (int k = 1; k <= i; ++k)
            J.col(k - 1) = 0.5 * vec8(dq_mul(w.axis_world[k - 1], s.com_world[i].dq()));
        jac[i - 1] = std::move(J);
    }
    return jac;
}

std::vector<Eigen::MatrixXd> pose_jacobian_derivative(const SerialChain& chain,
                                                      const Eigen::VectorXd& q,
                                                      const Eigen::VectorXd& qdot) {
    return chain_jacobians(chain, q, qdot).pose_jac_dot;
}

std::vector<Eigen::MatrixXd> twist_jacobian(const SerialChain& chain, const Eigen::VectorXd& q) {
    return chain_jacobians(chain, q, Eigen::VectorXd::Zero(chain.size())).twist_jac;
}

std::vector<Eigen::MatrixXd> twist_jacobian_derivative(const SerialChain& chain,
                                                       const Eigen::VectorXd& q,
                                                       const Eigen::VectorXd& qdot) {
    return chain_jacobians(chain, q, qdot).twist_jac_dot;
}

}  // namespace dqdyn
