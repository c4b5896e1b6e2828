#pragma once

#include "dqdyn/chain.hpp"

namespace dqdyn {

/// 6x6 generalized inertia Psi = blkdiag(I, m I3) of one link.
struct GeneralizedInertia {
    Mat3 inertia = Mat3::Identity();
    double mass = 1.0;

    Mat6 matrix() const {
        Mat6 psi = Mat6::Zero();
        psi.topLeftCorner<3, 3>() = inertia;
        psi.bottomRightCorner<3, 3>() = mass * Mat3::Identity();
        return psi;
    }
};

/// Canonical Euler-Lagrange triple M qdd + C qd + g = tau evaluated at (q, qdot).
struct ElModel {
    Eigen::MatrixXd inertia;    // M, n x n, symmetric positive definite
    Eigen::MatrixXd coriolis;   // C, n x n
    Eigen::VectorXd gravity;    // g, n
};

/// skew3(v) u = v x u.
Mat3 skew3(const Vec3& v);

/// blkdiag(-skew3(I w), m skew3(w)); anti-symmetric for every w.
Mat6 skew_bar(const Quaternion& omega, const GeneralizedInertia& psi);

Eigen::MatrixXd inertia_matrix(const SerialChain& chain, const Eigen::VectorXd& q);
Eigen::MatrixXd coriolis_matrix(const SerialChain& chain, const Eigen::VectorXd& q,
                                const Eigen::VectorXd& qdot);
Eigen::VectorXd gravity_vector(const SerialChain& chain, const Eigen::VectorXd& q);

/// One pass assembling M, C, and g together (shared Jacobians).
ElModel el_model(const SerialChain& chain, const Eigen::VectorXd& q, const Eigen::VectorXd& qdot);

/// tau = M qdd + C qd + g.
Eigen::VectorXd el_inverse_dynamics(const SerialChain& chain, const Eigen::VectorXd& q,
                                    const Eigen::VectorXd& qdot, const Eigen::VectorXd& qddot);

/// qdd = M^{-1} (tau - C qd - g) via a symmetric positive definite solve.
/// Throws if M is not positive definite or its condition estimate exceeds
/// 1/sqrt(machine epsilon).
Eigen::VectorXd forward_dynamics(const SerialChain& chain, const Eigen::VectorXd& q,
                                 const Eigen::VectorXd& qdot, const Eigen::VectorXd& tau);

/// Analytic dM/dt = sum_i (Jdot^T Psi J + J^T Psi Jdot), used by the
/// skew-symmetry property of (1/2) dM/dt - C.
Eigen::MatrixXd inertia_matrix_rate(const SerialChain& chain, const Eigen::VectorXd& q,
                                    const Eigen::VectorXd& qdot);

}  // namespace dqdyn
