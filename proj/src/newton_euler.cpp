#include "dqdyn/newton_euler.hpp"

#include <stdexcept>

namespace dqdyn {

namespace {

void check_inputs(const SerialChain& chain, const Eigen::VectorXd& q, const Eigen::VectorXd& qdot,
                  const Eigen::VectorXd& qddot) {
    if (q.size() != chain.size() || qdot.size() != chain.size() || qddot.size() != chain.size())
        throw std::invalid_argument("newton_euler: q, qdot, qddot must have length n");
    if (!q.allFinite() || !qdot.allFinite() || !qddot.allFinite())
        throw std::invalid_argument("newton_euler: non-finite input");
}

OpCounter* phase(NePhaseCounters* p, OpCounter NePhaseCounters::* member) {
    return p == nullptr ? nullptr : &(p->*member);
}

}  // namespace

TwistSet forward_recursion(const SerialChain& chain, const KinematicState& state,
                           const Eigen::VectorXd& q, const Eigen::VectorXd& qdot,
                           const Eigen::VectorXd& qddot, NePhaseCounters* phases) {
    check_inputs(chain, q, qdot, qddot);
    const int n = chain.size();
    OpCounter* ct = phase(phases, &NePhaseCounters::twists);
    OpCounter* cd = phase(phases, &NePhaseCounters::twist_derivatives);

    TwistSet out;
    out.xi.reserve(static_cast<size_t>(n));
    out.xi_dot.reserve(static_cast<size_t>(n));

    Twist xi_prev;      // xi_{0,c_0}^{c_0} = 0
    Twist xi_dot_prev;
    for (int i = 1; i <= n; ++i) {
        const JointModel& joint = chain.joint(i - 1);
        const Twist xi_joint = joint_twist(joint, q[i - 1], qdot[i - 1]);
        const Twist xi_joint_dot = joint_twist_derivative(joint, q[i - 1], qdot[i - 1], qddot[i - 1]);

        const Pose& rel_com = state.prev_com_in_com[i];    // x_{c_{i-1}}^{c_i}
        const Pose& rel_joint = state.prev_frame_in_com[i]; // x_{i-1}^{c_i}

        // xi_i = Ad(x_{c_{i-1}}^{c_i}) xi_{i-1} + Ad(x_{i-1}^{c_i}) xi_joint
        const Twist propagated = adjoint(rel_com, xi_prev, ct);
        const Twist own = adjoint(rel_joint, xi_joint, ct);
        const Twist xi_i = PureDualQuaternion{dq_add(propagated.dq(), own.dq(), ct)};

        // xi_{c_i,c_{i-1}}^{c_i} = -Ad(x_{i-1}^{c_i}) xi_joint, reusing `own`
        const Twist xi_rel = PureDualQuaternion{dq_scale(-1.0, own.dq(), cd)};
        const Twist propagated_dot = adjoint(rel_com, xi_dot_prev, cd);
        const Twist own_dot = adjoint(rel_joint, xi_joint_dot, cd);
        const Twist correction = cross(xi_rel, propagated, cd);
        const Twist xi_dot_i = PureDualQuaternion{
            dq_add(dq_add(propagated_dot.dq(), own_dot.dq(), cd), correction.dq(), cd)};

        out.xi.push_back(xi_i);
        out.xi_dot.push_back(xi_dot_i);
        xi_prev = xi_i;
        xi_dot_prev = xi_dot_i;
    }
    return out;
}

TwistSet forward_recursion(const SerialChain& chain, const Eigen::VectorXd& q,
                           const Eigen::VectorXd& qdot, const Eigen::VectorXd& qddot) {
    return forward_recursion(chain, fkine(chain, q), q, qdot, qddot);
}

WrenchSet backward_recursion(const SerialChain& chain, const KinematicState& state,
                             const TwistSet& twists, const std::optional<Wrench>& external_wrench,
                             NePhaseCounters* phases) {
    const int n = chain.size();
    if (static_cast<int>(twists.xi.size()) != n || static_cast<int>(twists.xi_dot.size()) != n)
        throw std::invalid_argument("backward_recursion: twist set size mismatch");
    OpCounter* cw = phase(phases, &NePhaseCounters::wrenches);
    OpCounter* cover = phase(phases, &NePhaseCounters::overhead);

    // Gravity is folded in as the equivalent base acceleration (-g), so the
    // projected wrenches are the efforts the joints must exert; this keeps
    // the output consistent with the Euler-Lagrange gravity vector.
    std::vector<Quaternion> g_com(static_cast<size_t>(n) + 1);
    for (int i = 1; i <= n; ++i)
        g_com[i] = rotate(quat_conj(state.com_world[i].dq().p, cover),
                          quat_scale(-1.0, chain.gravity(), cover), cover);

    WrenchSet out;
    out.joint_wrench.resize(static_cast<size_t>(n));

    Wrench next;  // zeta_{j_{i+1}}^{i}
    if (external_wrench.has_value()) next = *external_wrench;
    for (int i = n; i >= 1; --i) {
        const double m = chain.link(i - 1).mass;
        const Mat3& inertia = chain.link(i - 1).inertia;
        const Quaternion& w = twists.xi[static_cast<size_t>(i - 1)].primary();
        const Quaternion& v = twists.xi[static_cast<size_t>(i - 1)].dual();
        const Quaternion& w_dot = twists.xi_dot[static_cast<size_t>(i - 1)].primary();
        const Quaternion& v_dot = twists.xi_dot[static_cast<size_t>(i - 1)].dual();

        // f = m (D(xi_dot) + P(xi) x D(xi)), Newton's second law at the CoM
        const Quaternion f =
            quat_scale(m, quat_add(v_dot, quat_cross(w, v, cw), cw), cw);
        // tau = M3(I) P(xi_dot) + P(xi) x (M3(I) P(xi)), Euler's equation
        const Quaternion iw = m3_apply(inertia, w, cw);
        const Quaternion tau =
            quat_add(m3_apply(inertia, w_dot, cw), quat_cross(w, iw, cw), cw);
        // zeta_{0,c_i}^{c_i} with the gravity term
        const Wrench zeta_com{quat_add(f, quat_scale(m, g_com[i], cw), cw), tau};

        // zeta_{j_i}^{i-1} = Ad(x_{c_i}^{i-1}) zeta_com + Ad(x_i^{i-1}) zeta_{j_{i+1}}^{i}
        const Wrench from_com = adjoint(state.com_in_prev[i], zeta_com, cw);
        const Wrench from_child = adjoint(state.dh_pose[i], next, cw);
        const Wrench zeta = PureDualQuaternion{dq_add(from_com.dq(), from_child.dq(), cw)};

        out.joint_wrench[static_cast<size_t>(i - 1)] = zeta;
        next = zeta;
    }
    return out;
}

WrenchSet newton_euler(const SerialChain& chain, const Eigen::VectorXd& q,
                       const Eigen::VectorXd& qdot, const Eigen::VectorXd& qddot,
                       const std::optional<Wrench>& external_wrench, NePhaseCounters* phases) {
    check_inputs(chain, q, qdot, qddot);
    const KinematicState state = fkine(chain, q, phase(phases, &NePhaseCounters::fkine));
    const TwistSet twists = forward_recursion(chain, state, q, qdot, qddot, phases);
    return backward_recursion(chain, state, twists, external_wrench, phases);
}

Eigen::VectorXd project_wrenches(const SerialChain& chain, const WrenchSet& wrenches,
                                 const Eigen::VectorXd& q) {
    const int n = chain.size();
    if (static_cast<int>(wrenches.joint_wrench.size()) != n)
        throw std::invalid_argument("project_wrenches: wrench set size mismatch");
    if (q.size() != n) throw std::invalid_argument("project_wrenches: q must have length n");

    Eigen::VectorXd tau(n);
    for (int i = 0; i < n; ++i) {
        const JointModel& joint = chain.joint(i);
        const Wrench& zeta = wrenches.joint_wrench[static_cast<size_t>(i)];
        switch (joint.kind) {
            case JointKind::revolute: {
                const PureDualQuaternion axis{joint.axis, Quaternion::zero()};
                tau[i] = dot(zeta, axis).du;
                break;
            }
            case JointKind::prismatic: {
                const PureDualQuaternion axis{joint.axis, Quaternion::zero()};
                tau[i] = dot(zeta, axis).re;
                break;
            }
            case JointKind::custom: {
                if (!joint.custom->projection)
                    throw std::invalid_argument("project_wrenches: custom joint " +
                                                std::to_string(i + 1) +
                                                " has no declared projection");
                tau[i] = joint.custom->projection(zeta, q[i]);
                break;
            }
        }
    }
    return tau;
}

Eigen::VectorXd inverse_dynamics_ne(const SerialChain& chain, const Eigen::VectorXd& q,
                                    const Eigen::VectorXd& qdot, const Eigen::VectorXd& qddot,
                                    const std::optional<Wrench>& external_wrench) {
    return project_wrenches(chain, newton_euler(chain, q, qdot, qddot, external_wrench), q);
}

}  // namespace dqdyn
