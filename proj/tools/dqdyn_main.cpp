// Batch front end: trajectory inverse dynamics, cross-method validation,
// and operation-count tables.
//
// Exit codes: 0 success, 1 validation threshold exceeded, 2 bad input.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dqdyn/batch.hpp"
#include "dqdyn/builtin_models.hpp"
#include "dqdyn/cost_model.hpp"
#include "dqdyn/gauss_principle.hpp"
#include "dqdyn/newton_euler.hpp"
#include "dqdyn/robot_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitThreshold = 1;
constexpr int kExitInput = 2;

struct ModelArgs {
    std::string robot_path;
    std::string builtin;
};

dqdyn::SerialChain resolve_chain(const ModelArgs& args, std::string* name) {
    if (!args.builtin.empty()) {
        *name = args.builtin;
        return dqdyn::builtin_chain(args.builtin);
    }
    dqdyn::RobotDescription robot = dqdyn::load_robot(args.robot_path);
    *name = robot.name;
    return std::move(robot.chain);
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

int run_idyn(const ModelArgs& model, const std::string& traj_path, const std::string& method_name) {
    std::string name;
    const dqdyn::SerialChain chain = resolve_chain(model, &name);
    const dqdyn::Method method = dqdyn::method_from_string(method_name);
    const dqdyn::Trajectory traj = dqdyn::load_trajectory(traj_path, chain.size());

    dqdyn::SampleSet samples{traj.q, traj.qdot, traj.qddot};
    const Eigen::MatrixXd tau = dqdyn::batch_inverse_dynamics(chain, samples, method);

    std::string header = "t";
    for (int i = 1; i <= chain.size(); ++i) header += ",tau" + std::to_string(i);
    std::cout << header << "\n";
    for (Eigen::Index r = 0; r < traj.rows(); ++r) {
        std::cout << format_number(traj.t[r]);
        for (int i = 0; i < chain.size(); ++i) std::cout << "," << format_number(tau(i, r));
        std::cout << "\n";
    }
    return kExitOk;
}

int run_validate(const ModelArgs& model, long long samples, unsigned long long seed,
                 double threshold) {
    std::string name;
    const dqdyn::SerialChain chain = resolve_chain(model, &name);
    const dqdyn::ValidationReport report =
        dqdyn::validate_chain(chain, model.builtin.empty() ? name : model.builtin, samples, seed,
                              threshold);
    std::cout << report.render();
    return report.passed() ? kExitOk : kExitThreshold;
}

struct NRange {
    long long lo = 1;
    long long hi = 1;
};

NRange parse_n_range(const std::string& text) {
    NRange r;
    const size_t sep = text.find("..");
    try {
        if (sep == std::string::npos) {
            r.lo = r.hi = std::stoll(text);
        } else {
            r.lo = std::stoll(text.substr(0, sep));
            r.hi = std::stoll(text.substr(sep + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("--n: expected an integer or lo..hi range");
    }
    if (r.lo < 1 || r.hi < r.lo) throw std::invalid_argument("--n: need 1 <= lo <= hi");
    if (r.hi > 10000) throw std::invalid_argument("--n: range capped at 10000");
    return r;
}

void print_cost_csv(const NRange& range) {
    std::cout << "n,ne_fkine_mul,ne_fkine_add,ne_twist_mul,ne_twist_add,"
                 "ne_twistdot_mul,ne_twistdot_add,ne_wrench_mul,ne_wrench_add,"
                 "ne_total_mul,ne_total_add,"
                 "gp_jac_mul,gp_jac_add,gp_jacdot_mul,gp_jacdot_add,gp_inertia_mul,"
                 "gp_inertia_add,gp_coriolis_mul,gp_coriolis_add,gp_gravity_mul,"
                 "gp_gravity_add,gp_total_mul,gp_total_add,"
                 "classic_ne_mul,classic_ne_add,classic_el_mul,classic_el_add\n";
    for (long long n = range.lo; n <= range.hi; ++n) {
        const auto ne = dqdyn::cost::cost_ne(n);
        const auto gp = dqdyn::cost::cost_gplc(n);
        const auto classic = dqdyn::cost::classic_baselines(n);
        std::cout << n << "," << ne.fkine.mults << "," << ne.fkine.adds << "," << ne.twists.mults
                  << "," << ne.twists.adds << "," << ne.twist_derivatives.mults << ","
                  << ne.twist_derivatives.adds << "," << ne.wrenches.mults << ","
                  << ne.wrenches.adds << "," << ne.total.mults << "," << ne.total.adds << ","
                  << gp.jacobians.mults << "," << gp.jacobians.adds << ","
                  << gp.jacobian_dots.mults << "," << gp.jacobian_dots.adds << ","
                  << gp.inertia.mults << "," << gp.inertia.adds << "," << gp.coriolis.mults << ","
                  << gp.coriolis.adds << "," << gp.gravity.mults << "," << gp.gravity.adds << ","
                  << gp.total.mults << "," << gp.total.adds << "," << classic.newton_euler.mults
                  << "," << classic.newton_euler.adds << "," << classic.euler_lagrange.mults
                  << "," << classic.euler_lagrange.adds << "\n";
    }
}

void print_cost_table(const NRange& range) {
    const auto ne_model = dqdyn::cost::ne_cost_model();
    const auto gp_model = dqdyn::cost::gp_cost_model();

    std::printf("%-42s %-22s %s\n", "quantity", "mult", "add");
    std::printf("%-42s %-22s %s\n", "newton-euler fkine", ne_model.fkine.mults.str().c_str(),
                ne_model.fkine.adds.str().c_str());
    std::printf("%-42s %-22s %s\n", "newton-euler twists", ne_model.twists.mults.str().c_str(),
                ne_model.twists.adds.str().c_str());
    std::printf("%-42s %-22s %s\n", "newton-euler twist derivatives",
                ne_model.twist_derivatives.mults.str().c_str(),
                ne_model.twist_derivatives.adds.str().c_str());
    std::printf("%-42s %-22s %s\n", "newton-euler wrenches",
                ne_model.wrenches.mults.str().c_str(), ne_model.wrenches.adds.str().c_str());
    std::printf("%-42s %-22s %s\n", "newton-euler total", ne_model.total.mults.str().c_str(),
                ne_model.total.adds.str().c_str());
    std::printf("%-42s %-22s %s\n", "gauss-principle jacobians",
                gp_model.jacobians.mults.str().c_str(), gp_model.jacobians.adds.str().c_str());
    std::printf("%-42s %-22s %s\n", "gauss-principle jacobian derivatives",
                gp_model.jacobian_dots.mults.str().c_str(),
                gp_model.jacobian_dots.adds.str().c_str());
    std::printf("%-42s %-22s %s\n", "gauss-principle inertia matrix",
                gp_model.inertia.mults.str().c_str(), gp_model.inertia.adds.str().c_str());
    std::printf("%-42s %-22s %s\n", "gauss-principle coriolis matrix",
                gp_model.coriolis.mults.str().c_str(), gp_model.coriolis.adds.str().c_str());
    std::printf("%-42s %-22s %s\n", "gauss-principle gravity vector",
                gp_model.gravity.mults.str().c_str(), gp_model.gravity.adds.str().c_str());
    std::printf("%-42s %-22s %s\n", "gauss-principle total", gp_model.total.mults.str().c_str(),
                gp_model.total.adds.str().c_str());
    std::printf("%-42s %-22s %s\n", "classic newton-euler", "150n - 48", "131n - 48");
    std::printf("%-42s %-22s %s\n", "classic euler-lagrange", "412n - 277", "320n - 201");

    std::printf("\n%-6s %-16s %-16s %-16s %-16s\n", "n", "dq-NE mult", "dq-NE add", "dq-GP mult",
                "dq-GP add");
    for (long long n = range.lo; n <= range.hi; ++n) {
        const auto ne = dqdyn::cost::cost_ne(n);
        const auto gp = dqdyn::cost::cost_gplc(n);
        std::printf("%-6lld %-16lld %-16lld %-16lld %-16lld\n", n,
                    static_cast<long long>(ne.total.mults), static_cast<long long>(ne.total.adds),
                    static_cast<long long>(gp.total.mults), static_cast<long long>(gp.total.adds));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual quaternion dynamics toolkit"};
    app.require_subcommand(1);

    ModelArgs model;
    std::string traj_path;
    std::string method_name = "dqne";
    long long samples = 10000;
    unsigned long long seed = 42;
    double threshold = 1e-6;
    std::string n_range_text = "1..7";
    std::string format = "table";

    CLI::App* idyn = app.add_subcommand("idyn", "inverse dynamics along a trajectory file");
    idyn->add_option("--robot", model.robot_path, "robot description file (JSON)");
    idyn->add_option("--builtin", model.builtin, "builtin model: twolink or seven");
    idyn->add_option("--traj", traj_path, "trajectory CSV (t, q, qdot, qddot)")->required();
    idyn->add_option("--method", method_name, "dqne or dqgp");

    CLI::App* validate = app.add_subcommand("validate", "cross-method validation statistics");
    validate->add_option("--robot", model.robot_path, "robot description file (JSON)");
    validate->add_option("--builtin", model.builtin, "builtin model: twolink or seven");
    validate->add_option("--samples", samples, "number of random samples");
    validate->add_option("--seed", seed, "PRNG seed");
    validate->add_option("--threshold", threshold, "mean percentage error limit per joint");

    CLI::App* cost = app.add_subcommand("cost", "operation-count tables");
    cost->add_option("--n", n_range_text, "chain length or lo..hi range");
    cost->add_option("--format", format, "csv or table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (idyn->parsed()) {
            if (model.robot_path.empty() == model.builtin.empty()) {
                std::cerr << "idyn: exactly one of --robot/--builtin is required\n";
                return kExitInput;
            }
            return run_idyn(model, traj_path, method_name);
        }
        if (validate->parsed()) {
            if (model.robot_path.empty() == model.builtin.empty()) {
                std::cerr << "validate: exactly one of --robot/--builtin is required\n";
                return kExitInput;
            }
            if (samples < 1) {
                std::cerr << "validate: --samples must be >= 1\n";
                return kExitInput;
            }
            return run_validate(model, samples, seed, threshold);
        }
        if (cost->parsed()) {
            const NRange range = parse_n_range(n_range_text);
            if (format == "csv")
                print_cost_csv(range);
            else if (format == "table")
                print_cost_table(range);
            else {
                std::cerr << "cost: --format must be csv or table\n";
                return kExitInput;
            }
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
