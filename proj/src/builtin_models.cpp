#include "dqdyn/builtin_models.hpp"

#include <cmath>
#include <stdexcept>

namespace dqdyn {

namespace {

Mat3 sym3(double xx, double yy, double zz, double xy, double xz, double yz) {
    Mat3 m;
    m << xx, xy, xz,
         xy, yy, yz,
         xz, yz, zz;
    return m;
}

}  // namespace

TwoLinkParams two_link_params() {
    TwoLinkParams p;
    p.m1 = 1.5;
    p.m2 = 0.8;
    p.l1 = 0.6;
    p.lc1 = 0.3;
    p.lc2 = 0.25;
    p.inertia1 = 0.05;
    p.inertia2 = 0.02;
    p.gravity = 9.81;
    return p;
}

SerialChain two_link_chain() {
    const TwoLinkParams p = two_link_params();
    const double l2 = 0.5;  // distal link length; only the CoM position matters

    std::vector<JointModel> joints{JointModel::revolute(), JointModel::revolute()};
    std::vector<LinkParams> links(2);

    // Link frames sit at the link ends (DH a = length), so the CoM offsets
    // point back along -x. Only the zz inertia entry is exercised by planar
    // motion; the others just need to keep the tensor positive definite.
    links[0].dh = {0.0, 0.0, p.l1, 0.0};
    links[0].mass = p.m1;
    links[0].com_pose = Pose::translation(Quaternion::pure(p.lc1 - p.l1, 0.0, 0.0));
    links[0].inertia = sym3(0.02, 0.03, p.inertia1, 0.0, 0.0, 0.0);

    links[1].dh = {0.0, 0.0, l2, 0.0};
    links[1].mass = p.m2;
    links[1].com_pose = Pose::translation(Quaternion::pure(p.lc2 - l2, 0.0, 0.0));
    links[1].inertia = sym3(0.01, 0.015, p.inertia2, 0.0, 0.0, 0.0);

    return SerialChain(std::move(joints), std::move(links),
                       Quaternion::pure(0.0, -p.gravity, 0.0));
}

SerialChain seven_dof_chain() {
    const double half_pi = M_PI / 2.0;
    std::vector<JointModel> joints(7, JointModel::revolute());
    std::vector<LinkParams> links(7);

    const DhRow dh[7] = {
        {0.0, 0.34, 0.0, half_pi},  {0.0, 0.0, 0.0, -half_pi}, {0.0, 0.40, 0.0, -half_pi},
        {0.0, 0.0, 0.0, half_pi},   {0.0, 0.40, 0.0, half_pi}, {0.0, 0.0, 0.0, -half_pi},
        {0.0, 0.126, 0.0, 0.0},
    };
    const double mass[7] = {3.5, 3.5, 3.0, 3.0, 2.5, 1.8, 1.2};
    const Quaternion com[7] = {
        Quaternion::pure(0.0, 0.02, -0.15), Quaternion::pure(0.0, -0.05, 0.06),
        Quaternion::pure(0.0, 0.03, -0.12), Quaternion::pure(0.0, -0.04, 0.08),
        Quaternion::pure(0.0, 0.05, -0.10), Quaternion::pure(0.0, -0.02, 0.05),
        Quaternion::pure(0.01, 0.01, -0.06),
    };
    const Mat3 inertia[7] = {
        sym3(0.0300, 0.0280, 0.0260, 0.0008, 0.0006, 0.0010),
        sym3(0.0260, 0.0240, 0.0220, -0.0007, 0.0009, 0.0008),
        sym3(0.0220, 0.0200, 0.0180, 0.0006, -0.0005, 0.0007),
        sym3(0.0180, 0.0170, 0.0150, 0.0005, 0.0004, -0.0006),
        sym3(0.0150, 0.0130, 0.0120, -0.0004, 0.0003, 0.0005),
        sym3(0.0100, 0.0090, 0.0080, 0.0003, -0.0002, 0.0004),
        sym3(0.0060, 0.0050, 0.0040, 0.0002, 0.0001, -0.0002),
    };

    for (int i = 0; i < 7; ++i) {
        links[static_cast<size_t>(i)].dh = dh[i];
        links[static_cast<size_t>(i)].mass = mass[i];
        links[static_cast<size_t>(i)].com_pose = Pose::translation(com[i]);
        links[static_cast<size_t>(i)].inertia = inertia[i];
    }
    // Two links carry a rotated CoM frame so that path is exercised too.
    links[3].com_pose = Pose::rotation(0.3, Quaternion::i()) * Pose::translation(com[3]);
    links[6].com_pose = Pose::rotation(-0.5, Quaternion::k()) * Pose::translation(com[6]);

    return SerialChain(std::move(joints), std::move(links));
}

SerialChain builtin_chain(const std::string& name) {
    if (name == "twolink") return two_link_chain();
    if (name == "seven") return seven_dof_chain();
    throw std::invalid_argument("unknown builtin model '" + name + "'");
}

}  // namespace dqdyn
