#include "dqdyn/gauss_principle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dqdyn {

Mat3 skew3(const Vec3& v) {
    Mat3 m;
    m <<   0.0, -v[2],  v[1],
          v[2],   0.0, -v[0],
         -v[1],  v[0],   0.0;
    return m;
}

Mat6 skew_bar(const Quaternion& omega, const GeneralizedInertia& psi) {
    const Vec3 w = vec3(omega);
    Mat6 s = Mat6::Zero();
    s.topLeftCorner<3, 3>() = -skew3(psi.inertia * w);  // -S(s_{c_i}), s = I w
    s.bottomRightCorner<3, 3>() = psi.mass * skew3(w);
    return s;
}

namespace {

GeneralizedInertia link_psi(const SerialChain& chain, int i) {
    return {chain.link(i).inertia, chain.link(i).mass};
}

/// Per-link pieces of the Euler-Lagrange sums; accumulation over links is in
/// fixed ascending order so results are reproducible bit for bit.
struct GpTerms {
    ChainJacobians jac;
    std::vector<Mat6> psi;
    std::vector<Quaternion> omega;  // from the primary rows of J qdot
};

GpTerms gp_terms(const SerialChain& chain, const Eigen::VectorXd& q,
                 const Eigen::VectorXd& qdot) {
    GpTerms t{chain_jacobians(chain, q, qdot), {}, {}};
    const int n = chain.size();
    t.psi.reserve(static_cast<size_t>(n));
    t.omega.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        t.psi.push_back(link_psi(chain, i).matrix());
        const Vec6 xi = t.jac.twist_jac[static_cast<size_t>(i)] * qdot;
        t.omega.push_back(Quaternion::pure(xi[0], xi[1], xi[2]));
    }
    return t;
}

}  // namespace

Eigen::MatrixXd inertia_matrix(const SerialChain& chain, const Eigen::VectorXd& q) {
    const int n = chain.size();
    const auto jac = chain_jacobians(chain, q, Eigen::VectorXd::Zero(n));
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const Eigen::MatrixXd& j = jac.twist_jac[static_cast<size_t>(i)];
        m += j.transpose() * link_psi(chain, i).matrix() * j;
    }
    return m;
}

Eigen::MatrixXd coriolis_matrix(const SerialChain& chain, const Eigen::VectorXd& q,
                                const Eigen::VectorXd& qdot) {
    const int n = chain.size();
    const GpTerms t = gp_terms(chain, q, qdot);
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const Eigen::MatrixXd& j = t.jac.twist_jac[static_cast<size_t>(i)];
        const Eigen::MatrixXd& jdot = t.jac.twist_jac_dot[static_cast<size_t>(i)];
        const GeneralizedInertia psi = link_psi(chain, i);
        c += j.transpose() *
             (skew_bar(t.omega[static_cast<size_t>(i)], psi) * j + psi.matrix() * jdot);
    }
    return c;
}

Eigen::VectorXd gravity_vector(const SerialChain& chain, const Eigen::VectorXd& q) {
    const int n = chain.size();
    const auto jac = chain_jacobians(chain, q, Eigen::VectorXd::Zero(n));
    Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
        // f_g expressed in the CoM frame: Ad(r_0^{c_i}) m g
        const Quaternion r0_ci = quat_conj(jac.state.com_world[i + 1].dq().p);
        const Quaternion fg = rotate(r0_ci, quat_scale(chain.link(i).mass, chain.gravity()));
        const Eigen::MatrixXd jd =
            jac.twist_jac[static_cast<size_t>(i)].bottomRows(3);  // dual-part rows
        g -= jd.transpose() * vec3(fg);
    }
    return g;
}

ElModel el_model(const SerialChain& chain, const Eigen::VectorXd& q,
                 const Eigen::VectorXd& qdot) {
    const int n = chain.size();
    const GpTerms t = gp_terms(chain, q, qdot);

    ElModel model;
    model.inertia = Eigen::MatrixXd::Zero(n, n);
    model.coriolis = Eigen::MatrixXd::Zero(n, n);
    model.gravity = Eigen::VectorXd::Zero(n);

    for (int i = 0; i < n; ++i) {
        const Eigen::MatrixXd& j = t.jac.twist_jac[static_cast<size_t>(i)];
        const Eigen::MatrixXd& jdot = t.jac.twist_jac_dot[static_cast<size_t>(i)];
        const GeneralizedInertia psi = link_psi(chain, i);
        const Mat6 psi_m = psi.matrix();

        model.inertia += j.transpose() * psi_m * j;
        model.coriolis +=
            j.transpose() * (skew_bar(t.omega[static_cast<size_t>(i)], psi) * j + psi_m * jdot);

        const Quaternion r0_ci = quat_conj(t.jac.state.com_world[i + 1].dq().p);
        const Quaternion fg = rotate(r0_ci, quat_scale(psi.mass, chain.gravity()));
        model.gravity -= j.bottomRows(3).transpose() * vec3(fg);
    }
    return model;
}

Eigen::VectorXd el_inverse_dynamics(const SerialChain& chain, const Eigen::VectorXd& q,
                                    const Eigen::VectorXd& qdot, const Eigen::VectorXd& qddot) {
    if (qddot.size() != chain.size())
        throw std::invalid_argument("el_inverse_dynamics: qddot must have length n");
    const ElModel m = el_model(chain, q, qdot);
    return m.inertia * qddot + m.coriolis * qdot + m.gravity;
}

Eigen::VectorXd forward_dynamics(const SerialChain& chain, const Eigen::VectorXd& q,
                                 const Eigen::VectorXd& qdot, const Eigen::VectorXd& tau) {
    if (tau.size() != chain.size())
        throw std::invalid_argument("forward_dynamics: tau must have length n");
    const ElModel m = el_model(chain, q, qdot);

    Eigen::LLT<Eigen::MatrixXd> llt(m.inertia);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("forward_dynamics: inertia matrix is not positive definite");
    const double rcond = llt.rcond();
    if (rcond < std::sqrt(std::numeric_limits<double>::epsilon()))
        throw std::runtime_error(
            "forward_dynamics: inertia matrix ill-conditioned, condition estimate " +
            std::to_string(1.0 / rcond));
    return llt.solve(tau - m.coriolis * qdot - m.gravity);
}

Eigen::MatrixXd inertia_matrix_rate(const SerialChain& chain, const Eigen::VectorXd& q,
                                    const Eigen::VectorXd& qdot) {
    const int n = chain.size();
    const auto jac = chain_jacobians(chain, q, qdot);
    Eigen::MatrixXd m_dot = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const Eigen::MatrixXd& j = jac.twist_jac[static_cast<size_t>(i)];
        const Eigen::MatrixXd& jdot = jac.twist_jac_dot[static_cast<size_t>(i)];
        const Mat6 psi = link_psi(chain, i).matrix();
        m_dot += jdot.transpose() * psi * j + j.transpose() * psi * jdot;
    }
    return m_dot;
}

}  // namespace dqdyn
