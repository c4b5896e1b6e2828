#include "dqdyn/cost_model.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dqdyn::cost {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::int64_t Rational::as_integer() const {
    if (!is_integer()) throw std::domain_error("Rational: " + str() + " is not an integer");
    return num_;
}

Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}
Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}
Rational operator*(const Rational& a, const Rational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Poly::Poly(std::initializer_list<Rational> ascending_coeffs) {
    if (ascending_coeffs.size() > 4) throw std::invalid_argument("Poly: degree > 3");
    size_t k = 0;
    for (const Rational& c : ascending_coeffs) c_[k++] = c;
}

int Poly::degree() const {
    for (int k = 3; k >= 0; --k)
        if (c_[static_cast<size_t>(k)] != Rational(0)) return k;
    return 0;
}

Rational Poly::eval(std::int64_t n) const {
    Rational acc = 0;
    for (int k = 3; k >= 0; --k) acc = acc * Rational(n) + c_[static_cast<size_t>(k)];
    return acc;
}

Poly Poly::sum_over_links() const {
    // sum_{i=1}^{n} i^k for k = 0, 1, 2 as polynomials in n
    const Poly s0{0, 1};                                      // n
    const Poly s1{0, {1, 2}, {1, 2}};                         // n(n+1)/2
    const Poly s2{0, {1, 6}, {1, 2}, {1, 3}};                 // n(n+1)(2n+1)/6
    if (c_[3] != Rational(0))
        throw std::domain_error("Poly::sum_over_links: cubic summand not supported");
    return c_[0] * s0 + c_[1] * s1 + c_[2] * s2;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    for (size_t k = 0; k < 4; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}
Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    for (size_t k = 0; k < 4; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}
Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (size_t i = 0; i < 4; ++i) {
        if (a.c_[i] == Rational(0)) continue;
        for (size_t j = 0; j < 4; ++j) {
            if (b.c_[j] == Rational(0)) continue;
            if (i + j > 3) throw std::domain_error("Poly: product degree exceeds 3");
            r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
    }
    return r;
}
Poly operator*(const Rational& s, const Poly& p) {
    Poly r;
    for (size_t k = 0; k < 4; ++k) r.c_[k] = s * p.c_[static_cast<size_t>(k)];
    return r;
}

std::string Poly::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int k = 3; k >= 0; --k) {
        const Rational& c = c_[static_cast<size_t>(k)];
        if (c == Rational(0)) continue;
        if (!first) os << (c.num() < 0 ? " - " : " + ");
        else if (c.num() < 0) os << "-";
        const Rational mag = c.num() < 0 ? -c : c;
        if (k == 0 || mag != Rational(1)) os << mag.str();
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

OpCost PolyCost::eval(std::int64_t n) const {
    return {mults.eval(n).as_integer(), adds.eval(n).as_integer()};
}

OpCost quat_cross_cost() {
    return 2 * quat_mul_cost + quat_add_cost + quat_scale_cost;
}
OpCost quat_adjoint_cost() { return 2 * quat_mul_cost + quat_conj_cost; }
OpCost dq_cross_cost() { return 2 * dq_mul_cost + dq_add_cost + dq_scale_cost; }
OpCost dq_adjoint_cost() { return 2 * dq_mul_cost + dq_conj_cost; }

OpCost mat_mul_cost(std::int64_t m, std::int64_t p, std::int64_t r) {
    return {m * p * r, m * r * (p - 1)};
}
OpCost mat_add_cost(std::int64_t m, std::int64_t p) { return {0, m * p}; }
OpCost mat_scale_cost(std::int64_t m, std::int64_t p) { return {m * p, 0}; }

PolyCost mat_mul_cost(std::int64_t m, std::int64_t p, const Poly& r) {
    return {Rational(m * p) * r, Rational(m * (p - 1)) * r};
}
PolyCost mat_mul_cost(const Poly& m, std::int64_t p, const Poly& r) {
    return {Rational(p) * (m * r), Rational(p - 1) * (m * r)};
}
PolyCost mat_add_cost(std::int64_t m, const Poly& p) {
    return {Poly{}, Rational(m) * p};
}
PolyCost mat_add_cost(const Poly& m, const Poly& p) {
    return {Poly{}, m * p};
}

std::vector<PrimitiveRow> primitive_costs() {
    return {
        {"m3 apply", m3_apply_cost},
        {"quat scale", quat_scale_cost},
        {"quat conj", quat_conj_cost},
        {"quat add", quat_add_cost},
        {"quat mul", quat_mul_cost},
        {"quat cross", quat_cross_cost()},
        {"quat adjoint", quat_adjoint_cost()},
        {"dq scale", dq_scale_cost},
        {"dq conj", dq_conj_cost},
        {"dq add", dq_add_cost},
        {"dq mul", dq_mul_cost},
        {"dq adjoint", dq_adjoint_cost()},
        {"dq cross", dq_cross_cost()},
        {"skew3", skew3_cost},
        {"skew bar", skew_bar_cost},
    };
}

OpCost com_force_cost() { return quat_scale_cost + quat_cross_cost() + quat_add_cost; }
OpCost com_torque_cost() { return 2 * m3_apply_cost + quat_cross_cost() + quat_add_cost; }
OpCost com_varsigma_cost() { return com_force_cost() + com_torque_cost(); }
OpCost com_wrench_cost() { return com_varsigma_cost() + quat_add_cost + quat_scale_cost; }

NeCostModel ne_cost_model() {
    const Poly n = Poly::var();

    NeCostModel m;
    // Forward kinematics x_n^0, reference numbers from the dual quaternion
    // kinematics literature.
    m.fkine = {Poly{-48, 60}, Poly{-40, 44}};
    // Twist recursion: two adjoints and one sum per link.
    m.twists = {n * Poly::constant((2 * dq_adjoint_cost() + dq_add_cost).mults),
                n * Poly::constant((2 * dq_adjoint_cost() + dq_add_cost).adds)};
    // Twist-derivative recursion: two adjoints, one cross product, two sums,
    // and one scaling per link; the adjoints of the joint twists are shared
    // with the twist recursion.
    const OpCost deriv = 2 * dq_adjoint_cost() + dq_cross_cost() + 2 * dq_add_cost + dq_scale_cost;
    m.twist_derivatives = {n * Poly::constant(deriv.mults), n * Poly::constant(deriv.adds)};
    // Wrench recursion: the CoM wrench plus two adjoints and one sum per link.
    const OpCost wrench = com_wrench_cost() + 2 * dq_adjoint_cost() + dq_add_cost;
    m.wrenches = {n * Poly::constant(wrench.mults), n * Poly::constant(wrench.adds)};

    m.total = m.fkine + m.twists + m.twist_derivatives + m.wrenches;
    return m;
}

NeCostBreakdown cost_ne(std::int64_t n) {
    if (n < 1) throw std::domain_error("cost_ne: n must be >= 1");
    const NeCostModel m = ne_cost_model();
    return {m.fkine.eval(n), m.twists.eval(n), m.twist_derivatives.eval(n), m.wrenches.eval(n),
            m.total.eval(n)};
}

PolyCost pose_jacobian_cost() {
    // Reference numbers from the dual quaternion kinematics literature.
    return {Poly{-48, 189}, Poly{-40, 142}};
}

PolyCost pose_jacobian_dot_cost() {
    return {Poly{0, 312}, Poly{-8, 268}};
}

PolyCost twist_jacobian_cost() {
    // 2 Ibar H8(x) J: removing two rows of H8 makes the product 6x8 by 8xi,
    // and the doubling is one dual quaternion scaling.
    const Poly i = Poly::var();
    return pose_jacobian_cost() + PolyCost::constant(dq_scale_cost) + mat_mul_cost(6, 8, i);
}

PolyCost twist_jacobian_dot_cost() {
    const Poly i = Poly::var();
    return pose_jacobian_dot_cost() + PolyCost::constant(dq_scale_cost) +
           mat_mul_cost(6, 8, i) + mat_mul_cost(6, 8, i) + mat_add_cost(6, i);
}

PolyCost inertia_term_cost() {
    const Poly i = Poly::var();
    return mat_mul_cost(i, 6, Poly::constant(6)) + mat_mul_cost(i, 6, i);
}

PolyCost coriolis_term_cost() {
    const Poly i = Poly::var();
    return PolyCost::constant(skew_bar_cost) + mat_mul_cost(6, 6, i) + mat_mul_cost(6, 6, i) +
           mat_add_cost(6, i) + mat_mul_cost(i, 6, i);
}

PolyCost gravity_term_cost() {
    const Poly i = Poly::var();
    return mat_mul_cost(i, 3, Poly::constant(1)) + PolyCost::constant(quat_adjoint_cost());
}

GpCostModel gp_cost_model() {
    const Poly n = Poly::var();
    const Poly n_minus_1 = n - Poly::constant(1);

    GpCostModel m;
    m.jacobians = twist_jacobian_cost().sum_over_links();
    m.jacobian_dots = twist_jacobian_dot_cost().sum_over_links();
    // Zero-padded blocks are accumulated with n - 1 full n x n (or n x 1) sums.
    m.inertia = inertia_term_cost().sum_over_links() +
                PolyCost{Poly{}, n_minus_1 * (n * n)};
    m.coriolis = coriolis_term_cost().sum_over_links() +
                 PolyCost{Poly{}, n_minus_1 * (n * n)};
    m.gravity = gravity_term_cost().sum_over_links() + PolyCost{Poly{}, n_minus_1 * n};
    // tau = M qdd + C qd + g: two n x n by n x 1 products and two vector sums.
    const PolyCost assemble{Rational(2) * (n * n), Rational(2) * (n * (n - Poly::constant(1))) +
                                                       Rational(2) * n};
    m.total = m.jacobians + m.jacobian_dots + m.inertia + m.coriolis + m.gravity + assemble;
    return m;
}

GpCostBreakdown cost_gplc(std::int64_t n) {
    if (n < 1) throw std::domain_error("cost_gplc: n must be >= 1");
    const GpCostModel m = gp_cost_model();
    return {m.jacobians.eval(n), m.jacobian_dots.eval(n), m.inertia.eval(n), m.coriolis.eval(n),
            m.gravity.eval(n),   m.total.eval(n)};
}

ClassicBaselines classic_baselines(std::int64_t n) {
    if (n < 1) throw std::domain_error("classic_baselines: n must be >= 1");
    return {{150 * n - 48, 131 * n - 48}, {412 * n - 277, 320 * n - 201}};
}

}  // namespace dqdyn::cost
