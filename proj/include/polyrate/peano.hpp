#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "polyrate/barycentric.hpp"
#include "polyrate/errors.hpp"
#include "polyrate/lebesgue.hpp"
#include "polyrate/pointsystems.hpp"

namespace polyrate {

/// Regularity data for a limited-regularity function: f^{(r-1)} absolutely
/// continuous with density of total variation V_r.
struct RegularityClass {
    int r = 1;
    double total_variation = 0.0;
};

/// Peano kernel K_s(t) of the interpolation error functional E_n[.](x)
/// for a fixed evaluation point x and order s.
struct PeanoKernel {
    NodeSet nodeset;
    double x = 0.0;
    int order = 1;
    std::vector<double> basis_at_x; // ell_j(x), precomputed
};

inline PeanoKernel make_peano_kernel(NodeSet ns, double x, int order)
{
    if (order < 1 || order > ns.size())
        throw precondition_error("make_peano_kernel: need 1 <= order <= node count");
    if (x < -1.0 || x > 1.0) throw precondition_error("make_peano_kernel: x outside [-1,1]");
    PeanoKernel k;
    k.basis_at_x = eval_all_basis(ns, x);
    k.nodeset = std::move(ns);
    k.x = x;
    k.order = order;
    return k;
}

namespace detail {

// truncated power (a)_+^e with (a)_+^0 = 1 for a >= 0
inline double trunc_pow(double a, int e)
{
    if (a < 0.0) return 0.0;
    if (e == 0) return 1.0;
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= a;
    return r;
}

inline double factorial(int m)
{
    double r = 1.0;
    for (int i = 2; i <= m; ++i) r *= i;
    return r;
}

// Gauss-Legendre rule on [-1,1]; nodes from our own root finder, weights by
// the classical derivative formula.
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline const QuadRule& gauss_legendre_16()
{
    static const QuadRule rule = [] {
        QuadRule r;
        r.nodes = jacobi_roots(16, {0.0, 0.0});
        for (double x : r.nodes) {
            const double dp = eval_jacobi_derivative(16, {0.0, 0.0}, x, 1);
            r.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
        }
        return r;
    }();
    return rule;
}

// Integrate f over [a,b] by composite 16-point Gauss-Legendre.
template <class F>
double integrate_gl(F&& f, double a, double b)
{
    if (b <= a) return 0.0;
    const auto& rule = gauss_legendre_16();
    const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / 0.25)));
    double acc = 0.0;
    for (int p = 0; p < pieces; ++p) {
        const double lo = a + (b - a) * p / pieces;
        const double hi = a + (b - a) * (p + 1) / pieces;
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (size_t i = 0; i < rule.nodes.size(); ++i)
            acc += half * rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return acc;
}

// Integrate f over [a,b], splitting at the kernel's breakpoints (nodes and x)
// so each piece is smooth.
template <class F>
double integrate_piecewise(F&& f, double a, double b, const PeanoKernel& k)
{
    std::vector<double> bp{a, b};
    for (double xj : k.nodeset.nodes)
        if (xj > a && xj < b) bp.push_back(xj);
    if (k.x > a && k.x < b) bp.push_back(k.x);
    std::sort(bp.begin(), bp.end());
    double acc = 0.0;
    for (size_t i = 0; i + 1 < bp.size(); ++i) acc += integrate_gl(f, bp[i], bp[i + 1]);
    return acc;
}

} // namespace detail

/// K_s(t) evaluated pointwise from the truncated-power definition.
inline double kernel_eval(const PeanoKernel& k, double t)
{
    const int s = k.order;
    double acc = detail::trunc_pow(k.x - t, s - 1);
    for (int j = 0; j < k.nodeset.size(); ++j)
        acc -= detail::trunc_pow(k.nodeset.nodes[j] - t, s - 1) * k.basis_at_x[j];
    return acc / detail::factorial(s - 1);
}

/// Residual |K_s(t) - int_t^1 K_{s-1}(u) du|, with the integral computed by
/// quadrature split at the kernel breakpoints. Small residuals confirm the
/// integral recursion between consecutive kernel orders.
inline double kernel_recursion_check(const NodeSet& ns, double x, int s, double t)
{
    if (s < 2) throw precondition_error("kernel_recursion_check: s must be >= 2");
    const PeanoKernel ks = make_peano_kernel(ns, x, s);
    const PeanoKernel ksm1 = make_peano_kernel(ns, x, s - 1);
    const double integral =
        detail::integrate_piecewise([&](double u) { return kernel_eval(ksm1, u); }, t, 1.0, ksm1);
    return std::abs(kernel_eval(ks, t) - integral);
}

/// Interpolation error bound pi^r V_r / ((n-1)...(n-r)) * max_j ||ell_j||_inf
/// for functions in the given regularity class.
inline double error_bound(const NodeSet& ns, const RegularityClass& reg)
{
    const int n = ns.size();
    if (n <= reg.r) throw precondition_error("error_bound: need n >= r + 1");
    double denom = 1.0;
    for (int i = 1; i <= reg.r; ++i) denom *= (n - i);
    const double mbn = max_basis_norm(ns).value;
    return std::pow(M_PI, reg.r) * reg.total_variation / denom * mbn;
}

/// Error bound for strongly normal systems: pi^r V_r / (sqrt(c) (n-1)...(n-r)).
inline double strongly_normal_bound(const NodeSet& ns, const RegularityClass& reg, double c)
{
    if (c <= 0.0) throw precondition_error("strongly_normal_bound: c must be positive");
    const int n = ns.size();
    if (n <= reg.r) throw precondition_error("strongly_normal_bound: need n >= r + 1");
    double denom = 1.0;
    for (int i = 1; i <= reg.r; ++i) denom *= (n - i);
    return std::pow(M_PI, reg.r) * reg.total_variation / (std::sqrt(c) * denom);
}

} // namespace polyrate
