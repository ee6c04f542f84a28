#pragma once

#include <cmath>
#include <vector>

#include "polyrate/barycentric.hpp"
#include "polyrate/detail/golden.hpp"
#include "polyrate/errors.hpp"
#include "polyrate/pointsystems.hpp"

namespace polyrate {

/// Result of maximizing a piecewise-smooth function over [-1, 1].
struct MaximizationResult {
    double value = 0.0;
    double argmax = 0.0;
    bool refined = false;
};

/// Lebesgue function lambda_n(x) = sum_k |ell_k(x)|; equals 1 at nodes.
inline double lebesgue_function(const NodeSet& ns, double x)
{
    if (detail::snap_to_node(ns, x) >= 0) return 1.0;
    double den = 0.0, absnum = 0.0;
    for (int j = 0; j < ns.size(); ++j) {
        const double c = ns.bary_weights[j] / (x - ns.nodes[j]);
        den += c;
        absnum += std::abs(c);
    }
    return absnum / std::abs(den);
}

namespace detail {

// Coarse scan grid: breakpoints are the nodes plus the interval endpoints,
// with 10 interior samples per gap. lambda_n and |ell_j| are smooth inside
// each gap, so golden-section refinement around coarse local maxima is
// well-posed.
inline std::vector<double> coarse_grid(const NodeSet& ns)
{
    std::vector<double> bp;
    bp.push_back(-1.0);
    for (double x : ns.nodes)
        if (x > -1.0 && x < 1.0) bp.push_back(x);
    bp.push_back(1.0);
    std::vector<double> grid;
    for (size_t i = 0; i + 1 < bp.size(); ++i) {
        grid.push_back(bp[i]);
        for (int q = 1; q <= 10; ++q)
            grid.push_back(bp[i] + (bp[i + 1] - bp[i]) * q / 11.0);
    }
    grid.push_back(1.0);
    return grid;
}

// Maximize f over [-1,1]: scan the coarse grid, then refine every coarse
// local maximum by golden section. Ties break toward smaller x.
template <class F>
MaximizationResult grid_refine_max(const NodeSet& ns, F&& f)
{
    const auto grid = coarse_grid(ns);
    std::vector<double> fv(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) fv[i] = f(grid[i]);

    MaximizationResult best;
    best.value = fv[0];
    best.argmax = grid[0];
    for (size_t i = 0; i < grid.size(); ++i) {
        const bool local_max = (i == 0 || fv[i] >= fv[i - 1]) &&
                               (i + 1 == grid.size() || fv[i] >= fv[i + 1]);
        if (!local_max) continue;
        const double lo = (i == 0) ? grid[0] : grid[i - 1];
        const double hi = (i + 1 == grid.size()) ? grid.back() : grid[i + 1];
        auto [xr, vr] = detail::golden_max(f, lo, hi);
        double v = vr, xm = xr;
        if (fv[i] > v) { v = fv[i]; xm = grid[i]; }
        if (v > best.value || (v == best.value && xm < best.argmax)) {
            best.value = v;
            best.argmax = xm;
        }
    }
    best.refined = true;
    return best;
}

} // namespace detail

/// Lebesgue constant Lambda_n = max over [-1,1] of the Lebesgue function.
inline MaximizationResult lebesgue_constant(const NodeSet& ns)
{
    if (ns.size() < 1) throw precondition_error("lebesgue_constant: empty node set");
    if (ns.size() == 1) return {1.0, ns.nodes[0], true};
    return detail::grid_refine_max(ns, [&](double x) { return lebesgue_function(ns, x); });
}

/// max_j ||ell_j||_inf over all basis functions. A shared coarse scan
/// locates the most promising gap per basis function before refinement.
inline MaximizationResult max_basis_norm(const NodeSet& ns)
{
    const int n = ns.size();
    if (n < 1) throw precondition_error("max_basis_norm: empty node set");
    if (n == 1) return {1.0, ns.nodes[0], true};

    const auto grid = detail::coarse_grid(ns);
    std::vector<double> bestv(n, 0.0);
    std::vector<size_t> besti(n, 0);
    for (size_t i = 0; i < grid.size(); ++i) {
        const auto ell = eval_all_basis(ns, grid[i]);
        for (int j = 0; j < n; ++j) {
            if (std::abs(ell[j]) > bestv[j]) {
                bestv[j] = std::abs(ell[j]);
                besti[j] = i;
            }
        }
    }
    MaximizationResult best;
    best.value = -1.0;
    for (int j = 0; j < n; ++j) {
        const size_t i = besti[j];
        const double lo = (i == 0) ? grid[0] : grid[i - 1];
        const double hi = (i + 1 == grid.size()) ? grid.back() : grid[i + 1];
        auto [xr, vr] =
            detail::golden_max([&](double x) { return std::abs(eval_basis(ns, j, x)); }, lo, hi);
        double v = vr, xm = xr;
        if (bestv[j] > v) { v = bestv[j]; xm = grid[i]; }
        if (v > best.value || (v == best.value && xm < best.argmax)) {
            best.value = v;
            best.argmax = xm;
        }
    }
    best.refined = true;
    return best;
}

/// Least-squares slope of log(value) against log(n).
inline double growth_exponent(const std::vector<std::pair<int, double>>& values_by_n)
{
    if (values_by_n.size() < 3)
        throw precondition_error("growth_exponent: need at least 3 entries");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int prev_n = 0;
    for (auto [n, v] : values_by_n) {
        if (n <= prev_n) throw precondition_error("growth_exponent: n must be strictly increasing");
        if (v <= 0.0) throw precondition_error("growth_exponent: values must be positive");
        prev_n = n;
        const double lx = std::log(static_cast<double>(n));
        const double ly = std::log(v);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double m = static_cast<double>(values_by_n.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

} // namespace polyrate
