#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dqdyn/op_counter.hpp"

namespace dqdyn::cost {

/// Exact fraction over 64-bit integers, always normalized with a positive
/// denominator. The cost tables contain half- and sixth-integer coefficients
/// per degree of freedom, so floating point is not used anywhere here.
class Rational {
  public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    std::int64_t as_integer() const;  // throws unless integral
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return {-num_, den_}; }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string str() const;

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Polynomial of degree <= 3 with rational coefficients, coefficient 0 the
/// constant term. Degree 3 is all the tables need (cubic totals).
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<Rational> ascending_coeffs);

    static Poly constant(const Rational& c) { return Poly{c}; }
    static Poly var() { return Poly{0, 1}; }

    const Rational& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
    int degree() const;

    Rational eval(std::int64_t n) const;

    /// Sum of p(i) for i = 1..n as a polynomial in n (Faulhaber up to i^2).
    Poly sum_over_links() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);  // throws if degree > 3
    friend Poly operator*(const Rational& s, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "n") const;

  private:
    std::array<Rational, 4> c_{0, 0, 0, 0};
};

/// Integer multiplication/addition tally of one concrete operation.
struct OpCost {
    std::int64_t mults = 0;
    std::int64_t adds = 0;

    friend OpCost operator+(const OpCost& a, const OpCost& b) {
        return {a.mults + b.mults, a.adds + b.adds};
    }
    friend OpCost operator*(std::int64_t k, const OpCost& a) {
        return {k * a.mults, k * a.adds};
    }
    friend bool operator==(const OpCost& a, const OpCost& b) {
        return a.mults == b.mults && a.adds == b.adds;
    }
};

/// Pair of cost polynomials (multiplications, additions) in one size
/// variable, either the link index i or the chain length n.
struct PolyCost {
    Poly mults;
    Poly adds;

    friend PolyCost operator+(const PolyCost& a, const PolyCost& b) {
        return {a.mults + b.mults, a.adds + b.adds};
    }
    friend bool operator==(const PolyCost& a, const PolyCost& b) {
        return a.mults == b.mults && a.adds == b.adds;
    }

    static PolyCost constant(const OpCost& c) {
        return {Poly::constant(c.mults), Poly::constant(c.adds)};
    }
    PolyCost sum_over_links() const { return {mults.sum_over_links(), adds.sum_over_links()}; }
    OpCost eval(std::int64_t n) const;  // throws unless both values integral
};

// ---------------------------------------------------------------------------
// Elementary operation costs. The composite entries are built from the
// simpler ones exactly the way the algebra kernels are built, e.g. one dual
// quaternion adjoint is two dual multiplications plus one conjugation.
// ---------------------------------------------------------------------------

inline constexpr OpCost m3_apply_cost{9, 6};
inline constexpr OpCost quat_scale_cost{4, 0};
inline constexpr OpCost quat_conj_cost{3, 0};
inline constexpr OpCost quat_add_cost{0, 4};
inline constexpr OpCost quat_mul_cost{16, 12};
inline constexpr OpCost dq_scale_cost{8, 0};
inline constexpr OpCost dq_conj_cost{6, 0};
inline constexpr OpCost dq_add_cost{0, 8};
inline constexpr OpCost dq_mul_cost{48, 40};
inline constexpr OpCost skew3_cost{3, 0};
inline constexpr OpCost skew_bar_cost{18, 6};

OpCost quat_cross_cost();    // 2 quat mul + quat add + scalar scale
OpCost quat_adjoint_cost();  // 2 quat mul + conj
OpCost dq_cross_cost();      // 2 dq mul + dq add + scalar scale
OpCost dq_adjoint_cost();    // 2 dq mul + conj

/// Product of an m x p by a p x r matrix: {m p r, m r (p - 1)}.
OpCost mat_mul_cost(std::int64_t m, std::int64_t p, std::int64_t r);
OpCost mat_add_cost(std::int64_t m, std::int64_t p);
OpCost mat_scale_cost(std::int64_t m, std::int64_t p);

/// Matrix product/sum costs with a polynomial dimension.
PolyCost mat_mul_cost(std::int64_t m, std::int64_t p, const Poly& r);
PolyCost mat_mul_cost(const Poly& m, std::int64_t p, const Poly& r);
PolyCost mat_add_cost(std::int64_t m, const Poly& p);
PolyCost mat_add_cost(const Poly& m, const Poly& p);

struct PrimitiveRow {
    std::string name;
    OpCost cost;
};

/// Every fixed-size row of the elementary-cost table.
std::vector<PrimitiveRow> primitive_costs();

/// Runs one instrumented kernel invocation against a fresh counter and
/// returns the exact scalar-operation tally, e.g.
///   count_runtime_ops([&](OpCounter* c) { quat_mul(a, b, c); })
template <typename F>
OpCost count_runtime_ops(F&& invoke_kernel) {
    OpCounter counter;
    std::forward<F>(invoke_kernel)(&counter);
    return {counter.mults, counter.adds};
}

// ---------------------------------------------------------------------------
// Newton-Euler cost model (linear in n).
// ---------------------------------------------------------------------------

/// Per-link assembly of the CoM wrench: force, torque, their sum, and the
/// sum with the gravity term.
OpCost com_force_cost();    // {40, 32}
OpCost com_torque_cost();   // {54, 44}
OpCost com_varsigma_cost(); // {94, 76}
OpCost com_wrench_cost();   // {98, 80}

struct NeCostModel {
    PolyCost fkine;              // forward kinematics x_n^0
    PolyCost twists;             // forward twist recursion
    PolyCost twist_derivatives;  // forward twist-derivative recursion
    PolyCost wrenches;           // backward wrench recursion
    PolyCost total;
};

/// Symbolic model in the chain length n.
NeCostModel ne_cost_model();

struct NeCostBreakdown {
    OpCost fkine, twists, twist_derivatives, wrenches, total;
};

/// Evaluated breakdown; n must be >= 1.
NeCostBreakdown cost_ne(std::int64_t n);

// ---------------------------------------------------------------------------
// Gauss-principle Euler-Lagrange cost model (cubic in n).
// ---------------------------------------------------------------------------

/// Per-link rows as polynomials in the link index i.
PolyCost pose_jacobian_cost();        // J_{x_{c_i}^0}
PolyCost pose_jacobian_dot_cost();    // its time derivative
PolyCost twist_jacobian_cost();       // J_{xi_i}
PolyCost twist_jacobian_dot_cost();   // its time derivative
PolyCost inertia_term_cost();         // M-bar_i
PolyCost coriolis_term_cost();        // C-bar_i
PolyCost gravity_term_cost();         // g-bar_i

struct GpCostModel {
    PolyCost jacobians;      // all J_{xi_i}
    PolyCost jacobian_dots;  // all their derivatives
    PolyCost inertia;        // M
    PolyCost coriolis;       // C
    PolyCost gravity;        // g
    PolyCost total;
};

GpCostModel gp_cost_model();

struct GpCostBreakdown {
    OpCost jacobians, jacobian_dots, inertia, coriolis, gravity, total;
};

GpCostBreakdown cost_gplc(std::int64_t n);

// ---------------------------------------------------------------------------
// Classic-algorithm reference numbers (no classic implementation exists in
// this library; the formulas are reproduced for comparison only).
// ---------------------------------------------------------------------------

struct ClassicBaselines {
    OpCost newton_euler;    // 150n - 48, 131n - 48
    OpCost euler_lagrange;  // 412n - 277, 320n - 201
};

ClassicBaselines classic_baselines(std::int64_t n);

}  // namespace dqdyn::cost
