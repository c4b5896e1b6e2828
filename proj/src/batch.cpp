#include "dqdyn/batch.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dqdyn/builtin_models.hpp"
#include "dqdyn/gauss_principle.hpp"
#include "dqdyn/newton_euler.hpp"

namespace dqdyn {

Method method_from_string(const std::string& name) {
    if (name == "dqne") return Method::dqne;
    if (name == "dqgp") return Method::dqgp;
    throw std::invalid_argument("unknown method '" + name + "' (expected dqne or dqgp)");
}

SampleSet draw_samples(int n, Eigen::Index count, std::uint64_t seed) {
    if (count < 0) throw std::invalid_argument("draw_samples: negative sample count");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uq(-M_PI, M_PI);
    std::uniform_real_distribution<double> uqd(-2.0, 2.0);
    std::uniform_real_distribution<double> uqdd(-5.0, 5.0);

    SampleSet s;
    s.q.resize(n, count);
    s.qdot.resize(n, count);
    s.qddot.resize(n, count);
    for (Eigen::Index k = 0; k < count; ++k) {
        for (int i = 0; i < n; ++i) s.q(i, k) = uq(rng);
        for (int i = 0; i < n; ++i) s.qdot(i, k) = uqd(rng);
        for (int i = 0; i < n; ++i) s.qddot(i, k) = uqdd(rng);
    }
    return s;
}

Eigen::MatrixXd batch_inverse_dynamics(const SerialChain& chain, const SampleSet& samples,
                                       Method method, ExecutionMode mode) {
    const Eigen::Index count = samples.count();
    Eigen::MatrixXd tau(chain.size(), count);

    const auto evaluate = [&](Eigen::Index k) {
        if (method == Method::dqne)
            tau.col(k) = inverse_dynamics_ne(chain, samples.q.col(k), samples.qdot.col(k),
                                             samples.qddot.col(k));
        else
            tau.col(k) = el_inverse_dynamics(chain, samples.q.col(k), samples.qdot.col(k),
                                             samples.qddot.col(k));
    };

    if (mode == ExecutionMode::serial) {
        for (Eigen::Index k = 0; k < count; ++k) evaluate(k);
    } else {
#pragma omp parallel for schedule(static)
        for (Eigen::Index k = 0; k < count; ++k) evaluate(k);
    }
    return tau;
}

double pairwise_sum(const std::vector<double>& values) {
    // recursive halving; falls back to a straight loop on short runs
    struct Impl {
        static double run(const double* data, size_t count) {
            if (count <= 8) {
                double acc = 0.0;
                for (size_t i = 0; i < count; ++i) acc += data[i];
                return acc;
            }
            const size_t half = count / 2;
            return run(data, half) + run(data + half, count - half);
        }
    };
    return Impl::run(values.data(), values.size());
}

std::vector<JointErrorStats> torque_error_stats(const Eigen::MatrixXd& method_torques,
                                                const Eigen::MatrixXd& baseline_torques,
                                                double floor) {
    if (method_torques.rows() != baseline_torques.rows() ||
        method_torques.cols() != baseline_torques.cols())
        throw std::invalid_argument("torque_error_stats: shape mismatch");

    const Eigen::Index n = method_torques.rows();
    const Eigen::Index count = method_torques.cols();
    std::vector<JointErrorStats> stats(static_cast<size_t>(n));

    for (Eigen::Index i = 0; i < n; ++i) {
        std::vector<double> pct;
        pct.reserve(static_cast<size_t>(count));
        JointErrorStats& js = stats[static_cast<size_t>(i)];
        for (Eigen::Index k = 0; k < count; ++k) {
            const double base = baseline_torques(i, k);
            if (std::abs(base) < floor) {
                ++js.excluded;
                continue;
            }
            pct.push_back(100.0 * std::abs(method_torques(i, k) - base) / std::abs(base));
        }
        js.included = static_cast<std::int64_t>(pct.size());
        if (pct.empty()) continue;

        js.mean_pct = pairwise_sum(pct) / static_cast<double>(pct.size());
        for (double& e : pct) {
            if (e > js.max_pct) js.max_pct = e;
        }
        if (pct.size() > 1) {
            std::vector<double> sq(pct.size());
            for (size_t k = 0; k < pct.size(); ++k) {
                const double d = pct[k] - js.mean_pct;
                sq[k] = d * d;
            }
            js.std_pct = std::sqrt(pairwise_sum(sq) / static_cast<double>(sq.size() - 1));
        }
    }
    return stats;
}

bool ValidationReport::passed() const {
    for (const MethodReport& m : methods)
        for (const JointErrorStats& j : m.joints)
            if (!(j.mean_pct <= threshold_pct)) return false;
    return true;
}

std::string ValidationReport::render() const {
    std::ostringstream os;
    const auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6e", v);
        return std::string(buf);
    };
    os << "model: " << model << "\n";
    os << "samples: " << samples << "\n";
    os << "seed: " << seed << "\n";
    os << "baseline: " << baseline << "\n";
    os << "threshold_pct: " << num(threshold_pct) << "\n";
    os << "joint,method,mean_pct,std_pct,max_pct,excluded\n";
    for (const MethodReport& m : methods)
        for (size_t j = 0; j < m.joints.size(); ++j) {
            const JointErrorStats& js = m.joints[j];
            os << (j + 1) << "," << m.method << "," << num(js.mean_pct) << ","
               << num(js.std_pct) << "," << num(js.max_pct) << "," << js.excluded << "\n";
        }
    os << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

namespace {

Eigen::MatrixXd analytical_baseline(const SampleSet& samples) {
    const TwoLinkParams params = two_link_params();
    Eigen::MatrixXd tau(2, samples.count());
    for (Eigen::Index k = 0; k < samples.count(); ++k) {
        const auto t = analytical_two_link(params, samples.q.col(k), samples.qdot.col(k),
                                           samples.qddot.col(k));
        tau(0, k) = t[0];
        tau(1, k) = t[1];
    }
    return tau;
}

}  // namespace

ValidationReport validate_chain(const SerialChain& chain, const std::string& model_name,
                                Eigen::Index samples, std::uint64_t seed, double threshold_pct,
                                ExecutionMode mode) {
    if (samples < 1) throw std::invalid_argument("validate: sample count must be >= 1");

    ValidationReport report;
    report.model = model_name;
    report.samples = samples;
    report.seed = seed;
    report.threshold_pct = threshold_pct;

    const SampleSet set = draw_samples(chain.size(), samples, seed);
    const Eigen::MatrixXd tau_ne = batch_inverse_dynamics(chain, set, Method::dqne, mode);
    const Eigen::MatrixXd tau_gp = batch_inverse_dynamics(chain, set, Method::dqgp, mode);

    if (model_name == "twolink") {
        report.baseline = "analytical";
        const Eigen::MatrixXd tau_base = analytical_baseline(set);
        report.methods.push_back({"dqne", torque_error_stats(tau_ne, tau_base)});
        report.methods.push_back({"dqgp", torque_error_stats(tau_gp, tau_base)});
    } else {
        report.baseline = "dqne";
        report.methods.push_back({"dqgp", torque_error_stats(tau_gp, tau_ne)});
    }
    return report;
}

ValidationReport validate_builtin(const std::string& name, Eigen::Index samples,
                                  std::uint64_t seed, double threshold_pct, ExecutionMode mode) {
    return validate_chain(builtin_chain(name), name, samples, seed, threshold_pct, mode);
}

}  // namespace dqdyn
