#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "polyrate/errors.hpp"
#include "polyrate/pointsystems.hpp"

namespace polyrate {

// Absolute tolerance for snapping an evaluation point to a node.
inline constexpr double node_snap_tol = 1e-14;

/// A node set with sampled function values; evaluable anywhere in [-1,1]
/// through the second barycentric formula.
struct Interpolant {
    NodeSet nodeset;
    std::vector<double> values;
};

inline Interpolant make_interpolant(NodeSet ns, const std::function<double(double)>& f)
{
    Interpolant ip;
    ip.values.reserve(ns.nodes.size());
    for (double x : ns.nodes) ip.values.push_back(f(x));
    ip.nodeset = std::move(ns);
    return ip;
}

namespace detail {

inline int snap_to_node(const NodeSet& ns, double x)
{
    for (int j = 0; j < ns.size(); ++j)
        if (std::abs(x - ns.nodes[j]) <= node_snap_tol) return j;
    return -1;
}

} // namespace detail

/// L_n[f](x) by the second barycentric formula; returns the stored value
/// exactly when x coincides with a node.
inline double eval_interpolant(const Interpolant& ip, double x)
{
    const NodeSet& ns = ip.nodeset;
    const int j0 = detail::snap_to_node(ns, x);
    if (j0 >= 0) return ip.values[j0];
    double num = 0.0, den = 0.0;
    for (int j = 0; j < ns.size(); ++j) {
        const double c = ns.bary_weights[j] / (x - ns.nodes[j]);
        num += c * ip.values[j];
        den += c;
    }
    return num / den;
}

/// Lagrange basis function ell_k(x); exactly the Kronecker delta at nodes.
inline double eval_basis(const NodeSet& ns, int k, double x)
{
    if (k < 0 || k >= ns.size()) throw precondition_error("eval_basis: index out of range");
    const int j0 = detail::snap_to_node(ns, x);
    if (j0 >= 0) return j0 == k ? 1.0 : 0.0;
    double den = 0.0;
    for (int j = 0; j < ns.size(); ++j) den += ns.bary_weights[j] / (x - ns.nodes[j]);
    return (ns.bary_weights[k] / (x - ns.nodes[k])) / den;
}

/// All basis functions at once; O(n) per evaluation point.
inline std::vector<double> eval_all_basis(const NodeSet& ns, double x)
{
    std::vector<double> out(ns.size(), 0.0);
    const int j0 = detail::snap_to_node(ns, x);
    if (j0 >= 0) {
        out[j0] = 1.0;
        return out;
    }
    double den = 0.0;
    for (int j = 0; j < ns.size(); ++j) {
        out[j] = ns.bary_weights[j] / (x - ns.nodes[j]);
        den += out[j];
    }
    for (double& v : out) v /= den;
    return out;
}

namespace detail {

// Row j of the barycentric differentiation matrix, first or second order.
// Diagonal entries by the negative-sum trick.
inline double node_derivative(const Interpolant& ip, int j, int order)
{
    const NodeSet& ns = ip.nodeset;
    const int n = ns.size();
    std::vector<double> d1(n);
    double djj = 0.0;
    for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        d1[k] = (ns.bary_weights[k] / ns.bary_weights[j]) / (ns.nodes[j] - ns.nodes[k]);
        djj -= d1[k];
    }
    d1[j] = djj;
    if (order == 1) {
        double acc = 0.0;
        for (int k = 0; k < n; ++k) acc += d1[k] * ip.values[k];
        return acc;
    }
    // Welfert recurrence for the second-order row
    std::vector<double> d2(n);
    double d2jj = 0.0;
    for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        d2[k] = 2.0 / (ns.nodes[j] - ns.nodes[k]) *
                ((ns.bary_weights[k] / ns.bary_weights[j]) * d1[j] - d1[k]);
        d2jj -= d2[k];
    }
    d2[j] = d2jj;
    double acc = 0.0;
    for (int k = 0; k < n; ++k) acc += d2[k] * ip.values[k];
    return acc;
}

} // namespace detail

/// Derivative of the interpolating polynomial at x (order 1 or 2).
/// At nodes the rational form is singular, so differentiation-matrix rows
/// are used there; elsewhere the barycentric quotient is differentiated.
inline double eval_derivative(const Interpolant& ip, double x, int order)
{
    if (order != 1 && order != 2)
        throw precondition_error("eval_derivative: order must be 1 or 2");
    const NodeSet& ns = ip.nodeset;
    if (ns.size() < order + 1)
        throw precondition_error("eval_derivative: need at least order+1 nodes");
    const int j0 = detail::snap_to_node(ns, x);
    if (j0 >= 0) return detail::node_derivative(ip, j0, order);

    double q = 0.0, q1 = 0.0, q2 = 0.0;   // sum lam/(x-xj) and derivatives
    double s = 0.0, s1 = 0.0, s2 = 0.0;   // same with values
    for (int j = 0; j < ns.size(); ++j) {
        const double inv = 1.0 / (x - ns.nodes[j]);
        const double c = ns.bary_weights[j] * inv;
        q += c;
        q1 -= c * inv;
        q2 += 2.0 * c * inv * inv;
        s += c * ip.values[j];
        s1 -= c * inv * ip.values[j];
        s2 += 2.0 * c * inv * inv * ip.values[j];
    }
    const double p = s / q;
    const double p1 = (s1 - p * q1) / q;
    if (order == 1) return p1;
    return (s2 - 2.0 * p1 * q1 - p * q2) / q;
}

/// max |f_target(x) - L_n^{(m)}[f](x)| over the uniform grid {-1, -1+h, ..., 1},
/// where f_target is f itself or the analytic derivative of matching order.
inline double max_grid_error(const Interpolant& ip, const std::function<double(double)>& f_target,
                             double grid_step, int deriv_order)
{
    const double steps = 2.0 / grid_step;
    const long nsteps = std::lround(steps);
    if (std::abs(steps - nsteps) > 1e-9)
        throw precondition_error("max_grid_error: grid_step must divide 2");
    double worst = 0.0;
    for (long i = 0; i <= nsteps; ++i) {
        const double x = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(nsteps);
        const double approx = (deriv_order == 0) ? eval_interpolant(ip, x)
                                                 : eval_derivative(ip, x, deriv_order);
        worst = std::max(worst, std::abs(f_target(x) - approx));
    }
    return worst;
}

} // namespace polyrate
