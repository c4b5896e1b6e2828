#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dqdyn/chain.hpp"

namespace dqdyn {

enum class Method { dqne, dqgp };

/// The batch loops exist twice: a serial reference and an OpenMP version.
/// Samples are independent, every sample is computed with the identical
/// sequence of operations, and results are written to per-sample slots, so
/// both modes produce bit-identical output. The serial mode is kept for
/// tests and benchmarking.
enum class ExecutionMode { serial, parallel };

Method method_from_string(const std::string& name);

/// One (q, qdot, qddot) triple per column.
struct SampleSet {
    Eigen::MatrixXd q, qdot, qddot;

    Eigen::Index count() const { return q.cols(); }
};

/// Uniform samples with q in [-pi, pi], qdot in [-2, 2] rad/s, qddot in
/// [-5, 5] rad/s^2, drawn sample-major from a mt19937_64 seeded as given.
SampleSet draw_samples(int n, Eigen::Index count, std::uint64_t seed);

/// Inverse dynamics of every sample; one torque column per sample.
Eigen::MatrixXd batch_inverse_dynamics(const SerialChain& chain, const SampleSet& samples,
                                       Method method,
                                       ExecutionMode mode = ExecutionMode::parallel);

/// Sum in a fixed pairwise order; deterministic regardless of thread count.
double pairwise_sum(const std::vector<double>& values);

/// Percentage-error statistics of one joint against a baseline, following
/// the validation protocol: samples whose baseline torque magnitude falls
/// below `floor` are excluded from the statistics and counted.
struct JointErrorStats {
    double mean_pct = 0.0;
    double std_pct = 0.0;
    double max_pct = 0.0;
    std::int64_t excluded = 0;
    std::int64_t included = 0;
};

inline constexpr double kBaselineFloor = 1e-9;  // N*m; division guard

std::vector<JointErrorStats> torque_error_stats(const Eigen::MatrixXd& method_torques,
                                                const Eigen::MatrixXd& baseline_torques,
                                                double floor = kBaselineFloor);

struct MethodReport {
    std::string method;
    std::vector<JointErrorStats> joints;
};

struct ValidationReport {
    std::string model;
    std::string baseline;
    Eigen::Index samples = 0;
    std::uint64_t seed = 0;
    double threshold_pct = 0.0;
    std::vector<MethodReport> methods;

    bool passed() const;
    /// Fixed-format text rendering; byte-identical for identical inputs.
    std::string render() const;
};

/// Draws `samples` random configurations and compares methods against the
/// baseline: the analytical closed form for the builtin two-link model,
/// otherwise dqne (cross-formulation check). `model` is a builtin name here;
/// use validate_chain for a loaded robot.
ValidationReport validate_builtin(const std::string& name, Eigen::Index samples,
                                  std::uint64_t seed, double threshold_pct,
                                  ExecutionMode mode = ExecutionMode::parallel);

ValidationReport validate_chain(const SerialChain& chain, const std::string& model_name,
                                Eigen::Index samples, std::uint64_t seed, double threshold_pct,
                                ExecutionMode mode = ExecutionMode::parallel);

}  // namespace dqdyn
