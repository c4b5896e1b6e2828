#pragma once

#include <iosfwd>
#include <string>

#include "dqdyn/chain.hpp"

namespace dqdyn {

/// Raised for malformed robot descriptions and trajectory files; the message
/// names the offending link index or line number.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RobotDescription {
    std::string name;
    SerialChain chain;
};

/// Loads a robot description. The file is JSON with top-level fields `name`,
/// `gravity` (3 reals), and `links` (array); each link carries `joint`
/// ({`type`: "revolute"|"prismatic", optional `axis`: 3 reals}), `dh`
/// ({`theta`,`d`,`a`,`alpha`}), `mass`, `com` (3 reals), optional
/// `com_orientation` (unit quaternion w,x,y,z), and `inertia` (3x3
/// row-major, at the CoM in the CoM frame).
RobotDescription load_robot(const std::string& path);
RobotDescription parse_robot(const std::string& json_text);

/// Sampled joint trajectory: each row holds (t, q, qdot, qddot) with
/// strictly increasing t.
struct Trajectory {
    Eigen::VectorXd t;
    Eigen::MatrixXd q, qdot, qddot;  // one column per row of the file

    Eigen::Index rows() const { return t.size(); }
};

/// Reads a trajectory CSV with 1 + 3n columns per row; an optional header
/// row is skipped. n is taken from the chain the trajectory drives.
Trajectory load_trajectory(const std::string& path, int n);
Trajectory parse_trajectory(std::istream& in, int n, const std::string& source_name);

}  // namespace dqdyn
