#include <doctest.h>

#include <cmath>

#include "dqdyn/batch.hpp"
#include "dqdyn/builtin_models.hpp"

using namespace dqdyn;

TEST_CASE("sample drawing is seeded and in range") {
    const SampleSet a = draw_samples(3, 100, 7);
    const SampleSet b = draw_samples(3, 100, 7);
    const SampleSet c = draw_samples(3, 100, 8);
    CHECK((a.q.array() == b.q.array()).all());
    CHECK((a.qddot.array() == b.qddot.array()).all());
    CHECK_FALSE((a.q.array() == c.q.array()).all());

    CHECK(a.q.cwiseAbs().maxCoeff() <= M_PI);
    CHECK(a.qdot.cwiseAbs().maxCoeff() <= 2.0);
    CHECK(a.qddot.cwiseAbs().maxCoeff() <= 5.0);
}

TEST_CASE("parallel batch equals the serial reference bit for bit") {
    const SerialChain chain = seven_dof_chain();
    const SampleSet samples = draw_samples(chain.size(), 500, 99);
    for (const Method method : {Method::dqne, Method::dqgp}) {
        const Eigen::MatrixXd serial =
            batch_inverse_dynamics(chain, samples, method, ExecutionMode::serial);
        const Eigen::MatrixXd parallel =
            batch_inverse_dynamics(chain, samples, method, ExecutionMode::parallel);
        CHECK((serial.array() == parallel.array()).all());
    }
}

TEST_CASE("pairwise reduction is exact on permutation-heavy input") {
    std::vector<double> v;
    for (int i = 0; i < 1000; ++i) v.push_back(std::sin(i) * 1e-3 + (i % 7) * 0.25);
    const double s1 = pairwise_sum(v);
    const double s2 = pairwise_sum(v);
    CHECK(s1 == s2);
    double plain = 0;
    for (double x : v) plain += x;
    CHECK(s1 == doctest::Approx(plain).epsilon(1e-13));
}

TEST_CASE("error statistics with the near-zero baseline floor") {
    Eigen::MatrixXd base(1, 4), method(1, 4);
    base << 1.0, 2.0, 1e-12, -4.0;     // third sample is excluded
    method << 1.01, 2.0, 5.0, -4.2;
    const auto stats = torque_error_stats(method, base);
    REQUIRE(stats.size() == 1);
    CHECK(stats[0].excluded == 1);
    CHECK(stats[0].included == 3);
    // errors: 1%, 0%, 5%
    CHECK(stats[0].mean_pct == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(stats[0].max_pct == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("validation report on the two-link builtin") {
    const ValidationReport report = validate_builtin("twolink", 500, 42, 1e-6);
    CHECK(report.baseline == "analytical");
    REQUIRE(report.methods.size() == 2);
    for (const MethodReport& m : report.methods)
        for (const JointErrorStats& j : m.joints) CHECK(j.mean_pct <= 1e-6);
    CHECK(report.passed());

    // identical seeds render byte-identical reports
    const ValidationReport again = validate_builtin("twolink", 500, 42, 1e-6);
    CHECK(report.render() == again.render());

    // serial mode renders the same report as well
    const ValidationReport serial =
        validate_builtin("twolink", 500, 42, 1e-6, ExecutionMode::serial);
    CHECK(report.render() == serial.render());
}

TEST_CASE("validation report on the seven builtin uses dqne as baseline") {
    const ValidationReport report = validate_builtin("seven", 200, 7, 1e-6);
    CHECK(report.baseline == "dqne");
    REQUIRE(report.methods.size() == 1);
    CHECK(report.methods[0].method == "dqgp");
    CHECK(report.passed());
}

TEST_CASE("single-sample validation is deterministic") {
    const ValidationReport a = validate_builtin("seven", 1, 123, 1e-6);
    const ValidationReport b = validate_builtin("seven", 1, 123, 1e-6);
    CHECK(a.render() == b.render());
    CHECK(a.samples == 1);
}

TEST_CASE("threshold failure is reported") {
    const ValidationReport report = validate_builtin("seven", 50, 3, 0.0);
    CHECK_FALSE(report.passed());  // a zero threshold cannot be met
    CHECK(report.render().find("result: FAIL") != std::string::npos);
}
