#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "polyrate/barycentric.hpp"
#include "polyrate/errors.hpp"
#include "polyrate/pointsystems.hpp"

namespace polyrate {

/// Strong-normality diagnostics for a node set: minimum over k and t of the
/// Hermite-Fejer v_k functions.
struct NormalityReport {
    double min_v = 0.0;
    bool is_strongly_normal = false;
    std::vector<double> per_k_min;
};

namespace detail {

// omega''(x_k)/omega'(x_k) = sum_{j != k} 2/(x_k - x_j) for omega = prod(t - x_j).
inline double log_deriv_ratio(const NodeSet& ns, int k)
{
    double s = 0.0;
    for (int j = 0; j < ns.size(); ++j)
        if (j != k) s += 2.0 / (ns.nodes[k] - ns.nodes[j]);
    return s;
}

} // namespace detail

/// v_k(t) = 1 - (t - x_k) * omega''(x_k)/omega'(x_k).
inline double v_function(const NodeSet& ns, int k, double t)
{
    if (k < 0 || k >= ns.size()) throw precondition_error("v_function: index out of range");
    return 1.0 - (t - ns.nodes[k]) * detail::log_deriv_ratio(ns, k);
}

/// Minimum of v_k over all k and a uniform t-grid including both endpoints.
/// v_k is affine in t, so the per-k infimum over [-1,1] is attained at an
/// endpoint and the reported minima are exact.
inline NormalityReport normality_report(const NodeSet& ns, int grid_points = 2001)
{
    if (grid_points < 100) throw precondition_error("normality_report: grid_points must be >= 100");
    NormalityReport rep;
    rep.per_k_min.resize(ns.size());
    rep.min_v = std::numeric_limits<double>::infinity();
    for (int k = 0; k < ns.size(); ++k) {
        const double c = detail::log_deriv_ratio(ns, k);
        const double vlo = 1.0 - (-1.0 - ns.nodes[k]) * c;
        const double vhi = 1.0 - (1.0 - ns.nodes[k]) * c;
        rep.per_k_min[k] = std::min(vlo, vhi);
        rep.min_v = std::min(rep.min_v, rep.per_k_min[k]);
    }
    rep.is_strongly_normal = rep.min_v >= 1e-6;
    return rep;
}

/// Hermite-Fejer interpolant H_{2n-1}(t) matching the given values and
/// derivatives at the nodes: sum f_k v_k ell_k^2 + sum d_k (t - x_k) ell_k^2.
inline double hermite_fejer_eval(const NodeSet& ns, const std::vector<double>& values,
                                 const std::vector<double>& derivs, double t)
{
    if (static_cast<int>(values.size()) != ns.size() ||
        static_cast<int>(derivs.size()) != ns.size())
        throw precondition_error("hermite_fejer_eval: length mismatch");
    const auto ell = eval_all_basis(ns, t);
    // extended-precision accumulation: v_k can reach O(n^2) near the
    // endpoints and the summands cancel almost completely
    long double acc = 0.0L;
    for (int k = 0; k < ns.size(); ++k) {
        const long double l2 = static_cast<long double>(ell[k]) * ell[k];
        acc += values[k] * static_cast<long double>(v_function(ns, k, t)) * l2;
        acc += derivs[k] * static_cast<long double>(t - ns.nodes[k]) * l2;
    }
    return static_cast<double>(acc);
}

/// Verify the partial-sum sign pattern and domination property of the basis
/// functions at a point x strictly inside a node gap: one-sided cumulative
/// sums of ell_j(x) must carry the sign of their innermost term and be
/// dominated by it in magnitude.
inline bool wainerman_check(const NodeSet& ns, double x)
{
    const int n = ns.size();
    if (n < 2) throw precondition_error("wainerman_check: need at least 2 nodes");
    for (double xj : ns.nodes)
        if (std::abs(x - xj) <= 1e-13)
            throw precondition_error("wainerman_check: x coincides with a node");
    if (x <= ns.nodes.front() || x >= ns.nodes.back())
        throw precondition_error("wainerman_check: x must lie strictly between two nodes");

    // gap index: nodes[g] < x < nodes[g+1]
    const int g = static_cast<int>(std::upper_bound(ns.nodes.begin(), ns.nodes.end(), x) -
                                   ns.nodes.begin()) - 1;
    const auto ell = eval_all_basis(ns, x);

    auto expected_sign = [&](int j) {
        const int par = (j <= g) ? (g - j) : (j - g - 1);
        return (par % 2 == 0) ? 1.0 : -1.0;
    };

    const double tol = 1e-12;
    // prefix sums below the gap
    double acc = 0.0;
    for (int j = 0; j <= g; ++j) {
        acc += ell[j];
        if (acc * expected_sign(j) < -tol) return false;
        if (std::abs(acc) > std::abs(ell[j]) + tol) return false;
    }
    // suffix sums above the gap
    acc = 0.0;
    for (int j = n - 1; j > g; --j) {
        acc += ell[j];
        if (acc * expected_sign(j) < -tol) return false;
        if (std::abs(acc) > std::abs(ell[j]) + tol) return false;
    }
    return true;
}

} // namespace polyrate
