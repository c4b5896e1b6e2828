#include "dqdyn/robot_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace dqdyn {

namespace {

using nlohmann::json;

double number_field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_number())
        throw SchemaError(where + ": missing or non-numeric field '" + key + "'");
    return obj[key].get<double>();
}

Vec3 vec3_field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_array() || obj[key].size() != 3)
        throw SchemaError(where + ": field '" + key + "' must be an array of 3 numbers");
    Vec3 v;
    for (int k = 0; k < 3; ++k) {
        if (!obj[key][static_cast<size_t>(k)].is_number())
            throw SchemaError(where + ": field '" + key + "' must be numeric");
        v[k] = obj[key][static_cast<size_t>(k)].get<double>();
    }
    return v;
}

LinkParams parse_link(const json& link, const std::string& where, JointModel* joint) {
    if (!link.contains("joint") || !link["joint"].is_object())
        throw SchemaError(where + ": missing 'joint' object");
    const json& j = link["joint"];
    if (!j.contains("type") || !j["type"].is_string())
        throw SchemaError(where + ": joint needs a 'type' of \"revolute\" or \"prismatic\"");
    const std::string type = j["type"].get<std::string>();

    Quaternion axis = Quaternion::k();
    if (j.contains("axis")) {
        const Vec3 a = vec3_field(j, "axis", where);
        axis = Quaternion::pure(a[0], a[1], a[2]);
        if (std::abs(axis.norm() - 1.0) > kPurityTol)
            throw SchemaError(where + ": joint axis must have unit norm");
    }
    if (type == "revolute")
        *joint = JointModel::revolute(axis);
    else if (type == "prismatic")
        *joint = JointModel::prismatic(axis);
    else
        throw SchemaError(where + ": unknown joint type '" + type + "'");

    if (!link.contains("dh") || !link["dh"].is_object())
        throw SchemaError(where + ": missing 'dh' object");
    const json& dh = link["dh"];

    LinkParams params;
    params.dh = {number_field(dh, "theta", where), number_field(dh, "d", where),
                 number_field(dh, "a", where), number_field(dh, "alpha", where)};
    params.mass = number_field(link, "mass", where);

    const Vec3 com = vec3_field(link, "com", where);
    Quaternion orientation = Quaternion::one();
    if (link.contains("com_orientation")) {
        const json& r = link["com_orientation"];
        if (!r.is_array() || r.size() != 4)
            throw SchemaError(where + ": 'com_orientation' must be an array of 4 numbers (w,x,y,z)");
        orientation = {r[0].get<double>(), r[1].get<double>(), r[2].get<double>(),
                       r[3].get<double>()};
        if (std::abs(orientation.norm() - 1.0) > kPoseRenormTol)
            throw SchemaError(where + ": 'com_orientation' must have unit norm");
    }
    params.com_pose =
        Pose::from_rotation_translation(orientation, Quaternion::pure(com[0], com[1], com[2]));

    if (!link.contains("inertia") || !link["inertia"].is_array() || link["inertia"].size() != 9)
        throw SchemaError(where + ": 'inertia' must be a row-major array of 9 numbers");
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            const json& cell = link["inertia"][static_cast<size_t>(3 * r + c)];
            if (!cell.is_number()) throw SchemaError(where + ": 'inertia' must be numeric");
            params.inertia(r, c) = cell.get<double>();
        }
    return params;
}

}  // namespace

RobotDescription parse_robot(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("robot description: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("robot description: top level must be an object");

    const std::string name =
        doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "robot";

    Quaternion gravity = Quaternion::pure(0.0, 0.0, -9.81);
    if (doc.contains("gravity")) {
        const Vec3 g = vec3_field(doc, "gravity", "robot description");
        gravity = Quaternion::pure(g[0], g[1], g[2]);
    }

    if (!doc.contains("links") || !doc["links"].is_array() || doc["links"].empty())
        throw SchemaError("robot description: 'links' must be a non-empty array");

    std::vector<JointModel> joints;
    std::vector<LinkParams> links;
    for (size_t i = 0; i < doc["links"].size(); ++i) {
        const std::string where = "link " + std::to_string(i + 1);
        if (!doc["links"][i].is_object()) throw SchemaError(where + ": must be an object");
        JointModel joint;
        links.push_back(parse_link(doc["links"][i], where, &joint));
        joints.push_back(joint);
    }

    try {
        return {name, SerialChain(std::move(joints), std::move(links), gravity)};
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("robot description: ") + e.what());
    }
}

RobotDescription load_robot(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open robot file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_robot(buf.str());
}

Trajectory parse_trajectory(std::istream& in, int n, const std::string& source_name) {
    const int width = 1 + 3 * n;
    std::vector<std::vector<double>> rows;
    std::string line;
    int line_no = 0;
    bool first_content_line = true;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<double> values;
        std::stringstream ss(line);
        std::string cell;
        bool numeric = true;
        while (std::getline(ss, cell, ',')) {
            try {
                size_t used = 0;
                values.push_back(std::stod(cell, &used));
                while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used])))
                    ++used;
                if (used != cell.size()) numeric = false;
            } catch (const std::exception&) {
                numeric = false;
            }
            if (!numeric) break;
        }
        if (!numeric) {
            if (first_content_line) {  // header row
                first_content_line = false;
                continue;
            }
            throw SchemaError(source_name + ":" + std::to_string(line_no) +
                              ": non-numeric value");
        }
        first_content_line = false;
        if (static_cast<int>(values.size()) != width)
            throw SchemaError(source_name + ":" + std::to_string(line_no) + ": expected " +
                              std::to_string(width) + " columns, found " +
                              std::to_string(values.size()));
        for (const double v : values)
            if (!std::isfinite(v))
                throw SchemaError(source_name + ":" + std::to_string(line_no) +
                                  ": non-finite value");
        if (!rows.empty() && values[0] <= rows.back()[0])
            throw SchemaError(source_name + ":" + std::to_string(line_no) +
                              ": time stamps must be strictly increasing");
        rows.push_back(std::move(values));
    }

    Trajectory traj;
    const auto count = static_cast<Eigen::Index>(rows.size());
    traj.t.resize(count);
    traj.q.resize(n, count);
    traj.qdot.resize(n, count);
    traj.qddot.resize(n, count);
    for (Eigen::Index r = 0; r < count; ++r) {
        const std::vector<double>& row = rows[static_cast<size_t>(r)];
        traj.t[r] = row[0];
        for (int k = 0; k < n; ++k) {
            traj.q(k, r) = row[static_cast<size_t>(1 + k)];
            traj.qdot(k, r) = row[static_cast<size_t>(1 + n + k)];
            traj.qddot(k, r) = row[static_cast<size_t>(1 + 2 * n + k)];
        }
    }
    return traj;
}

Trajectory load_trajectory(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open trajectory file '" + path + "'");
    return parse_trajectory(in, n, path);
}

}  // namespace dqdyn
