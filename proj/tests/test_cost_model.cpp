#include <doctest.h>

#include <stdexcept>

#include "dqdyn/cost_model.hpp"

using namespace dqdyn::cost;

TEST_CASE("rational arithmetic") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(3, 2) * Rational(4, 3) == Rational(2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(4, 2).as_integer() == 2);
    CHECK_THROWS_AS(Rational(1, 2).as_integer(), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic and link summation") {
    const Poly n = Poly::var();
    const Poly p = Poly{1, 2} * Poly{3, 4};  // (1+2x)(3+4x) = 3 + 10x + 8x^2
    CHECK(p.coeff(0) == Rational(3));
    CHECK(p.coeff(1) == Rational(10));
    CHECK(p.coeff(2) == Rational(8));
    CHECK(p.eval(2) == Rational(55));

    // sum of i over 1..n and i^2 over 1..n
    CHECK(n.sum_over_links().eval(10) == Rational(55));
    CHECK((n * n).sum_over_links().eval(10) == Rational(385));
    CHECK(Poly::constant(7).sum_over_links().eval(10) == Rational(70));
}

TEST_CASE("elementary costs compose to the table values") {
    CHECK(quat_mul_cost == OpCost{16, 12});
    CHECK(quat_cross_cost() == OpCost{36, 28});
    CHECK(quat_adjoint_cost() == OpCost{35, 24});
    CHECK(dq_mul_cost == OpCost{48, 40});
    CHECK(dq_adjoint_cost() == OpCost{102, 80});
    CHECK(dq_cross_cost() == OpCost{104, 88});
    CHECK(m3_apply_cost == OpCost{9, 6});
    CHECK(skew_bar_cost == OpCost{18, 6});
    CHECK(skew3_cost == OpCost{3, 0});
    CHECK(mat_mul_cost(2, 3, 4) == OpCost{24, 16});
    CHECK(mat_add_cost(3, 5) == OpCost{0, 15});
    CHECK(mat_scale_cost(3, 5) == OpCost{15, 0});

    // the adjoint is two multiplications plus one conjugation
    CHECK(dq_adjoint_cost() == 2 * dq_mul_cost + dq_conj_cost);

    const auto table = primitive_costs();
    CHECK(table.size() == 15);
}

TEST_CASE("per-link CoM wrench costs") {
    CHECK(com_force_cost() == OpCost{40, 32});
    CHECK(com_torque_cost() == OpCost{54, 44});
    CHECK(com_varsigma_cost() == OpCost{94, 76});
    CHECK(com_wrench_cost() == OpCost{98, 80});
}

TEST_CASE("newton-euler cost rows") {
    const NeCostModel m = ne_cost_model();

    CHECK(m.fkine.mults == Poly{-48, 60});
    CHECK(m.fkine.adds == Poly{-40, 44});
    CHECK(m.twists.mults == Poly{0, 204});
    CHECK(m.twists.adds == Poly{0, 168});
    CHECK(m.twist_derivatives.mults == Poly{0, 316});
    CHECK(m.twist_derivatives.adds == Poly{0, 264});
    CHECK(m.wrenches.mults == Poly{0, 302});
    CHECK(m.wrenches.adds == Poly{0, 248});
    CHECK(m.total.mults == Poly{-48, 882});
    CHECK(m.total.adds == Poly{-40, 724});

    // spot evaluations
    CHECK(cost_ne(1).total == OpCost{834, 684});
    CHECK(cost_ne(1).wrenches == OpCost{302, 248});
    CHECK(cost_ne(7).total == OpCost{6126, 5028});
    CHECK_THROWS_AS(cost_ne(0), std::domain_error);
}

TEST_CASE("jacobian cost rows") {
    CHECK(pose_jacobian_cost().mults == Poly{-48, 189});
    CHECK(pose_jacobian_cost().adds == Poly{-40, 142});
    CHECK(pose_jacobian_dot_cost().mults == Poly{0, 312});
    CHECK(pose_jacobian_dot_cost().adds == Poly{-8, 268});
    CHECK(twist_jacobian_cost().mults == Poly{-40, 237});
    CHECK(twist_jacobian_cost().adds == Poly{-40, 184});
    CHECK(twist_jacobian_dot_cost().mults == Poly{8, 408});
    CHECK(twist_jacobian_dot_cost().adds == Poly{-8, 358});

    const GpCostModel m = gp_cost_model();
    CHECK(m.jacobians.mults == Poly{0, {157, 2}, {237, 2}});   // 118.5n^2 + 78.5n
    CHECK(m.jacobians.adds == Poly{0, 52, 92});
    CHECK(m.jacobian_dots.mults == Poly{0, 212, 204});
    CHECK(m.jacobian_dots.adds == Poly{0, 171, 179});
}

TEST_CASE("euler-lagrange cost rows") {
    // per-link terms
    CHECK(inertia_term_cost().mults == Poly{0, 36, 6});
    CHECK(inertia_term_cost().adds == Poly{0, 30, 5});
    CHECK(coriolis_term_cost().mults == Poly{18, 72, 6});
    CHECK(coriolis_term_cost().adds == Poly{6, 66, 5});
    CHECK(gravity_term_cost().mults == Poly{35, 3});
    CHECK(gravity_term_cost().adds == Poly{24, 2});

    // spot values from the table: M-bar at i=2 and g-bar at i=1
    CHECK(inertia_term_cost().eval(2) == OpCost{96, 80});
    CHECK(gravity_term_cost().eval(1) == OpCost{38, 26});

    const GpCostModel m = gp_cost_model();
    CHECK(m.inertia.mults == Poly{0, 19, 21, 2});
    CHECK(m.inertia.adds == Poly{0, {95, 6}, {33, 2}, {8, 3}});
    CHECK(m.coriolis.mults == Poly{0, 55, 39, 2});
    CHECK(m.coriolis.adds == Poly{0, {239, 6}, {69, 2}, {8, 3}});
    CHECK(m.gravity.mults == Poly{0, {73, 2}, {3, 2}});  // 1.5n^2 + 36.5n
    CHECK(m.gravity.adds == Poly{0, 24, 2});

    // grand total
    CHECK(m.total.mults == Poly{0, 401, 386, 4});
    CHECK(m.total.adds == Poly{0, {908, 3}, 326, {16, 3}});

    CHECK(cost_gplc(1).total == OpCost{791, 634});
    CHECK(cost_gplc(2).total.mults == 2378);
    CHECK_THROWS_AS(cost_gplc(0), std::domain_error);
}

TEST_CASE("classic baselines") {
    CHECK(classic_baselines(7).newton_euler == OpCost{1002, 869});
    CHECK(classic_baselines(1).euler_lagrange == OpCost{135, 119});
    // mult ratio dq-NE / classic-NE at n = 7 is about 6.11
    const double ratio = static_cast<double>(cost_ne(7).total.mults) /
                         static_cast<double>(classic_baselines(7).newton_euler.mults);
    CHECK(ratio == doctest::Approx(6.1138).epsilon(1e-3));
}

TEST_CASE("totals are strictly increasing in n") {
    for (long long n = 1; n < 30; ++n) {
        CHECK(cost_ne(n + 1).total.mults > cost_ne(n).total.mults);
        CHECK(cost_ne(n + 1).total.adds > cost_ne(n).total.adds);
        CHECK(cost_gplc(n + 1).total.mults > cost_gplc(n).total.mults);
        CHECK(cost_gplc(n + 1).total.adds > cost_gplc(n).total.adds);
    }
}

TEST_CASE("evaluated table values are exact integers") {
    for (long long n = 1; n <= 12; ++n) {
        const auto gp = cost_gplc(n);  // as_integer throws on any fraction
        CHECK(gp.total.mults > 0);
        CHECK(gp.jacobians.mults > 0);
        CHECK(gp.gravity.adds > 0);
    }
}
