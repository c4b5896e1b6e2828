#pragma once

#include "dqdyn/chain.hpp"
#include "dqdyn/two_link.hpp"

namespace dqdyn {

/// Parameters of the built-in planar two-link arm.
TwoLinkParams two_link_params();

/// The built-in planar two-link arm as a serial chain: two revolute joints
/// about z, links along x, gravity -9.81 j (in-plane). Its torques match
/// analytical_two_link(two_link_params(), ...).
SerialChain two_link_chain();

/// Synthetic 7-DOF arm with alternating +-pi/2 DH twists, off-axis centers
/// of mass, and dense positive definite inertia tensors. The inertial values
/// are arbitrary but valid; the model exists so the two dynamics
/// formulations can be cross-checked on a chain of realistic depth.
SerialChain seven_dof_chain();

/// Looks up a builtin by name ("twolink" or "seven"); throws otherwise.
SerialChain builtin_chain(const std::string& name);

}  // namespace dqdyn
