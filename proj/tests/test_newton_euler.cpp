#include <doctest.h>

#include <cmath>
#include <random>

#include "dqdyn/builtin_models.hpp"
#include "dqdyn/cost_model.hpp"
#include "dqdyn/gauss_principle.hpp"
#include "dqdyn/newton_euler.hpp"
#include "dqdyn/two_link.hpp"

using namespace dqdyn;

namespace {

std::mt19937_64 rng(6120);

Eigen::VectorXd random_vec(int n, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = d(rng);
    return v;
}

SerialChain pendulum_chain() {
    LinkParams link;
    link.dh = {0, 0, 0, 0};
    link.mass = 1.0;
    link.com_pose = Pose::translation(Quaternion::pure(0.5, 0, 0));
    link.inertia = Mat3::Identity() * (1.0 / 12.0);
    return SerialChain({JointModel::revolute()}, {link},
                       Quaternion::pure(0.0, -9.81, 0.0));
}

SerialChain random_mixed_chain(int n) {
    std::vector<JointModel> joints;
    std::vector<LinkParams> links;
    for (int i = 0; i < n; ++i) {
        joints.push_back(i % 3 == 1 ? JointModel::prismatic() : JointModel::revolute());
        LinkParams link;
        link.dh = {0.3 * i, 0.15, 0.25, 0.4 * (i % 4)};
        link.mass = 0.5 + 0.3 * i;
        link.com_pose = Pose::translation(Quaternion::pure(-0.1, 0.03, 0.05));
        Mat3 inertia = Mat3::Identity() * (0.02 + 0.01 * i);
        inertia(0, 1) = inertia(1, 0) = 0.002;
        link.inertia = inertia;
        links.push_back(link);
    }
    return SerialChain(joints, links);
}

}  // namespace

TEST_CASE("forward recursion at rest is zero") {
    const SerialChain chain = seven_dof_chain();
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(7);
    const TwistSet twists = forward_recursion(chain, random_vec(7, -M_PI, M_PI), zero, zero);
    for (int i = 0; i < 7; ++i) {
        CHECK(vec6(twists.xi[i]).cwiseAbs().maxCoeff() == 0.0);
        CHECK(vec6(twists.xi_dot[i]).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("one-link twist gains the lever term in the CoM frame") {
    const SerialChain chain = pendulum_chain();
    const double theta_dot = 1.6;
    const TwistSet twists =
        forward_recursion(chain, Eigen::VectorXd::Zero(1),
                          Eigen::VectorXd::Constant(1, theta_dot), Eigen::VectorXd::Zero(1));
    // omega = theta_dot k; dual part omega x p with p = +0.5 i
    const Vec6 expected =
        (Vec6() << 0, 0, theta_dot, 0, 0.5 * theta_dot, 0).finished();
    CHECK((vec6(twists.xi[0]) - expected).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("self-cancellation of the joint twist cross term") {
    // the derivation drops xi_rel x Ad(x_{i-1}^{c_i}) xi_joint because a
    // twist crossed with itself vanishes; adding it must change nothing
    const SerialChain chain = random_mixed_chain(4);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::VectorXd q = random_vec(4, -M_PI, M_PI);
        const Eigen::VectorXd qd = random_vec(4, -2, 2);
        const KinematicState s = fkine(chain, q);
        for (int i = 1; i <= 4; ++i) {
            const Twist xi_joint = joint_twist(chain.joint(i - 1), q[i - 1], qd[i - 1]);
            const Twist own = adjoint(s.prev_frame_in_com[i], xi_joint);
            const Twist xi_rel = PureDualQuaternion{dq_scale(-1.0, own.dq())};
            CHECK(vec6(cross(xi_rel, own)).cwiseAbs().maxCoeff() <= 1e-14);
        }
    }
}

TEST_CASE("world-frame equivalence of the twist derivative") {
    // xi_dot from the recursion equals Ad(x_0^{c_i}) xi_dot^0 computed
    // non-recursively from the world-frame jacobians
    const SerialChain chain = seven_dof_chain();
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::VectorXd q = random_vec(7, -M_PI, M_PI);
        const Eigen::VectorXd qd = random_vec(7, -2, 2);
        const Eigen::VectorXd qdd = random_vec(7, -5, 5);

        const ChainJacobians jac = chain_jacobians(chain, q, qd);
        const TwistSet twists = forward_recursion(chain, jac.state, q, qd, qdd);

        for (int i = 1; i <= 7; ++i) {
            // world twist derivative through the world-frame pose rates:
            // vec8 xi^0 = 2 (H8(xdot) vec8(x*) + H8(x) vec8(xdot*)) ... or
            // directly: xi0 = 2 xdot x*, xi0_dot = 2(xddot x* + xdot xdot*).
            // Assemble xdot and xddot from the pose jacobians.
            const DualQuaternion x = jac.state.com_world[i].dq();
            const Eigen::VectorXd qd_i = qd.head(i);
            const Eigen::VectorXd qdd_i = qdd.head(i);
            const DualQuaternion x_dot = dq_from_vec8(jac.pose_jac[i - 1] * qd_i);
            const DualQuaternion x_ddot = dq_from_vec8(jac.pose_jac_dot[i - 1] * qd_i +
                                                       jac.pose_jac[i - 1] * qdd_i);
            const DualQuaternion xi0_dot = dq_scale(
                2.0, dq_add(dq_mul(x_ddot, dq_conj(x)), dq_mul(x_dot, dq_conj(x_dot))));
            DualQuaternion expected = dq_adjoint(dq_conj(x), xi0_dot);
            expected.p.w = 0.0;
            expected.d.w = 0.0;
            CHECK((vec6(twists.xi_dot[i - 1]) - vec6(PureDualQuaternion{expected}))
                      .cwiseAbs()
                      .maxCoeff() <= 1e-10);
        }
    }
}

TEST_CASE("linear acceleration extraction matches finite differences") {
    // p_ddot = D(xi_dot) - D(xi) x P(xi), compared against a central
    // difference of the CoM position along q(t) = q + t qd + t^2/2 qdd
    const SerialChain chain = seven_dof_chain();
    const Eigen::VectorXd q = random_vec(7, -M_PI, M_PI);
    const Eigen::VectorXd qd = random_vec(7, -2, 2);
    const Eigen::VectorXd qdd = random_vec(7, -5, 5);

    const KinematicState s = fkine(chain, q);
    const TwistSet twists = forward_recursion(chain, s, q, qd, qdd);

    const double h = 1e-5;
    for (int i = 1; i <= 7; ++i) {
        const Quaternion accel_body =
            quat_sub(twists.xi_dot[i - 1].dual(),
                     quat_cross(twists.xi[i - 1].dual(), twists.xi[i - 1].primary()));
        // world-frame acceleration by rotating with r_{c_i}^0
        const Quaternion r = s.com_world[i].rotation_part();
        const Vec3 accel_world = vec3(rotate(r, accel_body));

        const auto pos_at = [&](double t) {
            const Eigen::VectorXd qt = q + t * qd + 0.5 * t * t * qdd;
            return vec3(fkine(chain, qt).com_world[i].translation_part());
        };
        const Vec3 fd = (pos_at(h) - 2.0 * pos_at(0.0) + pos_at(-h)) / (h * h);
        CHECK((accel_world - fd).cwiseAbs().maxCoeff() <= 1e-4);
    }
}

TEST_CASE("backward recursion basics") {
    // no gravity and no motion: all wrenches vanish
    std::vector<JointModel> joints{JointModel::revolute()};
    LinkParams link;
    link.dh = {0, 0, 0.3, 0};
    link.mass = 1.0;
    link.com_pose = Pose::translation(Quaternion::pure(-0.1, 0, 0));
    link.inertia = Mat3::Identity() * 0.1;
    const SerialChain chain({joints}, {link}, Quaternion::pure(0, 0, 0));

    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(1);
    const WrenchSet w = newton_euler(chain, zero, zero, zero);
    CHECK(vec6(w.joint_wrench[0]).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("static pendulum torque") {
    const SerialChain chain = pendulum_chain();
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(1);
    const Eigen::VectorXd tau = inverse_dynamics_ne(chain, zero, zero, zero);
    // m g l_c cos(q) = 1 * 9.81 * 0.5, the torque the joint must exert
    CHECK(std::abs(tau[0]) == doctest::Approx(4.905).epsilon(1e-12));
    CHECK(tau[0] == doctest::Approx(4.905).epsilon(1e-12));

    // at a random angle the pendulum oracle still holds
    const Eigen::VectorXd q = random_vec(1, -M_PI, M_PI);
    const Eigen::VectorXd tau_q = inverse_dynamics_ne(chain, q, zero, zero);
    CHECK(tau_q[0] == doctest::Approx(4.905 * std::cos(q[0])).epsilon(1e-12));
}

TEST_CASE("gravity in the CoM frame matches the rotation-matrix oracle") {
    const SerialChain chain = seven_dof_chain();
    const Eigen::VectorXd q = random_vec(7, -M_PI, M_PI);
    const KinematicState s = fkine(chain, q);
    for (int i = 1; i <= 7; ++i) {
        const Quaternion r = s.com_world[i].rotation_part();
        const Quaternion g_cm = rotate(quat_conj(r), chain.gravity());
        Eigen::Matrix3d rot;
        rot << 1 - 2 * (r.y * r.y + r.z * r.z), 2 * (r.x * r.y - r.w * r.z),
            2 * (r.x * r.z + r.w * r.y), 2 * (r.x * r.y + r.w * r.z),
            1 - 2 * (r.x * r.x + r.z * r.z), 2 * (r.y * r.z - r.w * r.x),
            2 * (r.x * r.z - r.w * r.y), 2 * (r.y * r.z + r.w * r.x),
            1 - 2 * (r.x * r.x + r.y * r.y);
        const Vec3 expected = rot.transpose() * vec3(chain.gravity());
        CHECK((vec3(g_cm) - expected).cwiseAbs().maxCoeff() <= 1e-14);
    }
}

TEST_CASE("newton_euler equals the composition of its sweeps") {
    const SerialChain chain = random_mixed_chain(5);
    const Eigen::VectorXd q = random_vec(5, -M_PI, M_PI);
    const Eigen::VectorXd qd = random_vec(5, -2, 2);
    const Eigen::VectorXd qdd = random_vec(5, -5, 5);

    const KinematicState s = fkine(chain, q);
    const WrenchSet composed =
        backward_recursion(chain, s, forward_recursion(chain, s, q, qd, qdd));
    const WrenchSet direct = newton_euler(chain, q, qd, qdd);
    for (int i = 0; i < 5; ++i)
        CHECK((vec6(composed.joint_wrench[i]) - vec6(direct.joint_wrench[i]))
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
}

TEST_CASE("zero external wrench equals omitting it") {
    const SerialChain chain = random_mixed_chain(3);
    const Eigen::VectorXd q = random_vec(3, -M_PI, M_PI);
    const Eigen::VectorXd qd = random_vec(3, -2, 2);
    const Eigen::VectorXd qdd = random_vec(3, -5, 5);

    const WrenchSet without = newton_euler(chain, q, qd, qdd);
    const WrenchSet with_zero = newton_euler(chain, q, qd, qdd, Wrench::zero());
    for (int i = 0; i < 3; ++i)
        CHECK((vec6(without.joint_wrench[i]) - vec6(with_zero.joint_wrench[i]))
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
}

TEST_CASE("external end-effector wrench propagates through the chain") {
    const SerialChain chain = pendulum_chain();
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(1);
    // pull along x at the tip frame (frame 1 = joint frame at q = 0)
    const Wrench pull{Quaternion::pure(2.0, 0, 0), Quaternion::zero()};
    const Eigen::VectorXd tau =
        project_wrenches(chain, newton_euler(chain, zero, zero, zero, pull), zero);
    // the pulled force passes through the origin of frame 0, so the static
    // gravity torque is unchanged
    CHECK(tau[0] == doctest::Approx(4.905).epsilon(1e-12));

    const Wrench push{Quaternion::pure(0, 3.0, 0), Quaternion::zero()};
    const Eigen::VectorXd tau2 =
        project_wrenches(chain, newton_euler(chain, zero, zero, zero, push), zero);
    // frame 1 sits at the origin here (dh a = 0), so no extra moment arm
    CHECK(tau2[0] == doctest::Approx(4.905).epsilon(1e-12));
}

TEST_CASE("wrench projection") {
    const Wrench zeta{quat_scale(2.0, Quaternion::i()), quat_scale(3.0, Quaternion::k())};

    LinkParams link;
    link.mass = 1.0;
    link.inertia = Mat3::Identity();
    const SerialChain rev({JointModel::revolute()}, {link});
    const SerialChain pri({JointModel::prismatic(Quaternion::i())}, {link});

    WrenchSet set;
    set.joint_wrench = {zeta};
    const Eigen::VectorXd q = Eigen::VectorXd::Zero(1);
    CHECK(project_wrenches(rev, set, q)[0] == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(project_wrenches(pri, set, q)[0] == doctest::Approx(2.0).epsilon(1e-15));

    WrenchSet zero_set;
    zero_set.joint_wrench = {Wrench::zero()};
    CHECK(project_wrenches(rev, zero_set, q)[0] == 0.0);

    // custom joint without a declared projection is a configuration error
    CustomJoint no_projection;
    no_projection.motion = [](double qi) { return Pose::rotation(qi, Quaternion::k()); };
    no_projection.generator = [](double) {
        return PureDualQuaternion{Quaternion::k(), Quaternion::zero()};
    };
    no_projection.generator_rate = [](double) { return PureDualQuaternion::zero(); };
    const SerialChain custom({JointModel::make_custom(no_projection)}, {link});
    CHECK_THROWS_AS(project_wrenches(custom, set, q), std::invalid_argument);
}

TEST_CASE("two-link torques match the analytical oracle") {
    const SerialChain chain = two_link_chain();
    const TwoLinkParams params = two_link_params();
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::VectorXd q = random_vec(2, -M_PI, M_PI);
        const Eigen::VectorXd qd = random_vec(2, -2, 2);
        const Eigen::VectorXd qdd = random_vec(2, -5, 5);

        const Eigen::VectorXd tau = inverse_dynamics_ne(chain, q, qd, qdd);
        const auto expected = analytical_two_link(params, q, qd, qdd);
        const double scale = std::max({1.0, std::abs(expected[0]), std::abs(expected[1])});
        CHECK(std::abs(tau[0] - expected[0]) / scale <= 1e-9);
        CHECK(std::abs(tau[1] - expected[1]) / scale <= 1e-9);
    }
}

TEST_CASE("cross-formulation equivalence on random chains") {
    for (int n = 1; n <= 7; ++n) {
        const SerialChain chain = random_mixed_chain(n);
        for (int trial = 0; trial < 10; ++trial) {
            const Eigen::VectorXd q = random_vec(n, -M_PI, M_PI);
            const Eigen::VectorXd qd = random_vec(n, -2, 2);
            const Eigen::VectorXd qdd = random_vec(n, -5, 5);
            const Eigen::VectorXd tau_ne = inverse_dynamics_ne(chain, q, qd, qdd);
            const Eigen::VectorXd tau_gp = el_inverse_dynamics(chain, q, qd, qdd);
            const double scale = std::max(1.0, tau_gp.cwiseAbs().maxCoeff());
            CHECK((tau_ne - tau_gp).cwiseAbs().maxCoeff() / scale <= 1e-8);
        }
    }
}

TEST_CASE("recursion phases count exactly what the cost model charges") {
    // The recurrence algebra of the three sweeps is two adjoints plus a sum
    // per link (twists), the same plus a cross product, a negation, and an
    // extra sum (twist derivatives), and the CoM wrench plus two adjoints
    // and a sum (wrenches). These per-phase tallies land exactly on the
    // symbolic model rows; kinematics preparation, gravity re-expression,
    // and projection are charged to `overhead` (the model books forward
    // kinematics with factored-transform counts this library does not use).
    const SerialChain chain = seven_dof_chain();
    const int n = chain.size();
    const Eigen::VectorXd q = random_vec(n, -M_PI, M_PI);
    const Eigen::VectorXd qd = random_vec(n, -2, 2);
    const Eigen::VectorXd qdd = random_vec(n, -5, 5);

    NePhaseCounters phases;
    newton_euler(chain, q, qd, qdd, std::nullopt, &phases);

    const auto model = cost::ne_cost_model();
    const auto row = [&](const cost::PolyCost& p) { return p.eval(n); };

    CHECK(phases.twists.mults == row(model.twists).mults);
    CHECK(phases.twists.adds == row(model.twists).adds);
    CHECK(phases.twist_derivatives.mults == row(model.twist_derivatives).mults);
    CHECK(phases.twist_derivatives.adds == row(model.twist_derivatives).adds);
    CHECK(phases.wrenches.mults == row(model.wrenches).mults);
    CHECK(phases.wrenches.adds == row(model.wrenches).adds);
}
