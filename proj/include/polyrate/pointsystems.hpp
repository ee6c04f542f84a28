#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "polyrate/errors.hpp"
#include "polyrate/jacobi.hpp"

namespace polyrate {

enum class PointFamily {
    GaussJacobi,
    JacobiGaussLobatto,
    JacobiGaussRadauPlus1,
    JacobiGaussRadauMinus1,
    ChebyshevFirst,
    ChebyshevSecond,
    Equispaced,
};

inline const char* family_name(PointFamily f)
{
    switch (f) {
        case PointFamily::GaussJacobi: return "gauss-jacobi";
        case PointFamily::JacobiGaussLobatto: return "lobatto";
        case PointFamily::JacobiGaussRadauPlus1: return "radau+1";
        case PointFamily::JacobiGaussRadauMinus1: return "radau-1";
        case PointFamily::ChebyshevFirst: return "cheb1";
        case PointFamily::ChebyshevSecond: return "cheb2";
        case PointFamily::Equispaced: return "equispaced";
    }
    return "?";
}

inline PointFamily parse_family(const std::string& s)
{
    if (s == "gauss-jacobi") return PointFamily::GaussJacobi;
    if (s == "lobatto") return PointFamily::JacobiGaussLobatto;
    if (s == "radau+1") return PointFamily::JacobiGaussRadauPlus1;
    if (s == "radau-1") return PointFamily::JacobiGaussRadauMinus1;
    if (s == "cheb1") return PointFamily::ChebyshevFirst;
    if (s == "cheb2") return PointFamily::ChebyshevSecond;
    if (s == "equispaced") return PointFamily::Equispaced;
    throw precondition_error("unknown point family: " + s);
}

/// A pointsystem request: family, Jacobi parameters (ignored for the
/// Chebyshev and equispaced families) and the TOTAL point count n.
/// Lobatto systems with total count n use the interior roots of
/// P_{n-2}^{(a,b)}; Radau systems use P_{n-1}^{(a,b)} plus one endpoint.
struct PointSystemSpec {
    PointFamily family = PointFamily::ChebyshevFirst;
    JacobiParams params;
    int n = 1;
};

/// Nodes in ascending order with barycentric weights normalized to
/// max |weight| = 1.
struct NodeSet {
    std::vector<double> nodes;
    std::vector<double> bary_weights;
    PointSystemSpec spec;

    int size() const { return static_cast<int>(nodes.size()); }
};

/// Barycentric weights lambda_j ~ 1/prod_{k!=j}(x_j - x_k), computed in log
/// space with sign tracking and rescaled so that max |lambda_j| = 1.
inline std::vector<double> barycentric_weights(const std::vector<double>& nodes)
{
    const int n = static_cast<int>(nodes.size());
    if (n < 1) throw precondition_error("barycentric_weights: empty node set");
    // extended precision: relative weight errors get amplified by O(n^2)
    // factors in downstream identities (e.g. the Hermite-Fejer partition)
    std::vector<long double> logw(n, 0.0L);
    std::vector<double> sign(n, 1.0);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            const double d = nodes[j] - nodes[k];
            if (d == 0.0)
                throw precondition_error("barycentric_weights: duplicate nodes");
            logw[j] -= std::log(std::abs((long double)d));
            if (d < 0.0) sign[j] = -sign[j];
        }
    }
    const long double lmax = *std::max_element(logw.begin(), logw.end());
    std::vector<double> w(n);
    for (int j = 0; j < n; ++j)
        w[j] = sign[j] * static_cast<double>(std::exp(logw[j] - lmax));
    return w;
}

namespace detail {

/// Roots of P_n^{(a,b)} in ascending order. Brackets come from a sign-change
/// scan in the Chebyshev angle; each root is polished by Newton iteration with
/// a bisection safeguard that keeps the iterate inside its bracket.
inline std::vector<double> jacobi_roots(int n, const JacobiParams& p)
{
    if (n == 0) return {};
    require_valid(p);
    auto f = [&](double x) { return eval_jacobi(n, p, x); };

    // scan cos(theta) on a grid fine enough to separate all n roots
    std::vector<std::pair<double, double>> brackets;
    for (int m = std::max(8 * n, 64); m <= (1 << 20); m *= 2) {
        brackets.clear();
        double xprev = -1.0, fprev = f(-1.0);
        for (int i = 1; i <= m; ++i) {
            const double theta = M_PI * (1.0 - static_cast<double>(i) / m);
            const double x = (i == m) ? 1.0 : std::cos(theta);
            const double fx = f(x);
            if ((fprev < 0.0 && fx > 0.0) || (fprev > 0.0 && fx < 0.0))
                brackets.emplace_back(xprev, x);
            else if (fx == 0.0 && i < m)
                brackets.emplace_back(xprev, std::cos(M_PI * (1.0 - (i + 0.5) / m)));
            xprev = x;
            fprev = fx;
        }
        if (static_cast<int>(brackets.size()) == n) break;
    }
    if (static_cast<int>(brackets.size()) != n)
        throw numerical_error("jacobi_roots: failed to bracket all roots");

    std::vector<double> roots(n);
    for (int j = 0; j < n; ++j) {
        double lo = brackets[j].first, hi = brackets[j].second;
        double flo = f(lo);
        double x = 0.5 * (lo + hi);
        for (int it = 0; it < 100; ++it) {
            const double fx = f(x);
            if (fx == 0.0) break;
            if ((flo < 0.0) == (fx < 0.0)) lo = x; else hi = x;
            const double dfx = eval_jacobi_derivative(n, p, x, 1);
            double step = fx / dfx;
            double xn = x - step;
            if (!std::isfinite(xn) || xn <= lo || xn >= hi) xn = 0.5 * (lo + hi);
            if (std::abs(xn - x) <= 1e-16 * (1.0 + std::abs(x))) { x = xn; break; }
            x = xn;
        }
        roots[j] = x;
    }
    return roots;
}

} // namespace detail

/// Generate the nodes of the requested family together with their
/// barycentric weights. Endpoints for Lobatto/Radau systems are exact.
inline NodeSet generate_nodes(const PointSystemSpec& spec)
{
    const int n = spec.n;
    std::vector<double> x;
    switch (spec.family) {
        case PointFamily::ChebyshevFirst: {
            if (n < 1) throw precondition_error("generate_nodes: n must be >= 1");
            x.resize(n);
            for (int k = 1; k <= n; ++k)
                x[n - k] = std::cos((2.0 * k - 1.0) / (2.0 * n) * M_PI);
            break;
        }
        case PointFamily::ChebyshevSecond: {
            if (n < 2) throw precondition_error("generate_nodes: cheb2 needs n >= 2");
            x.resize(n);
            for (int k = 0; k < n; ++k)
                x[n - 1 - k] = std::cos(static_cast<double>(k) / (n - 1) * M_PI);
            x.front() = -1.0;
            x.back() = 1.0;
            break;
        }
        case PointFamily::Equispaced: {
            if (n < 1) throw precondition_error("generate_nodes: n must be >= 1");
            x.resize(n);
            if (n == 1) {
                x[0] = 0.0;
            } else {
                for (int k = 0; k < n; ++k) x[k] = -1.0 + 2.0 * k / (n - 1.0);
            }
            break;
        }
        case PointFamily::GaussJacobi: {
            if (n < 1) throw precondition_error("generate_nodes: n must be >= 1");
            x = detail::jacobi_roots(n, spec.params);
            break;
        }
        case PointFamily::JacobiGaussLobatto: {
            if (n < 2) throw precondition_error("generate_nodes: lobatto needs n >= 2");
            x = detail::jacobi_roots(n - 2, spec.params);
            x.insert(x.begin(), -1.0);
            x.push_back(1.0);
            break;
        }
        case PointFamily::JacobiGaussRadauPlus1: {
            if (n < 1) throw precondition_error("generate_nodes: n must be >= 1");
            x = detail::jacobi_roots(n - 1, spec.params);
            x.push_back(1.0);
            break;
        }
        case PointFamily::JacobiGaussRadauMinus1: {
            if (n < 1) throw precondition_error("generate_nodes: n must be >= 1");
            x = detail::jacobi_roots(n - 1, spec.params);
            x.insert(x.begin(), -1.0);
            break;
        }
    }
    NodeSet ns;
    ns.nodes = std::move(x);
    ns.bary_weights = barycentric_weights(ns.nodes);
    ns.spec = spec;
    return ns;
}

/// Sup-norm distance between the empirical node CDF and the arcsine
/// (limiting Chebyshev) distribution, sampled on a 1001-point grid.
inline double node_density_check(const NodeSet& ns)
{
    if (ns.size() < 10) throw precondition_error("node_density_check: n must be >= 10");
    const int n = ns.size();
    double worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double t = -1.0 + 2.0 * i / 1000.0;
        const double mu = (std::asin(std::clamp(t, -1.0, 1.0)) + M_PI / 2.0) / M_PI;
        const auto it = std::upper_bound(ns.nodes.begin(), ns.nodes.end(), t);
        const double emp = static_cast<double>(it - ns.nodes.begin()) / n;
        worst = std::max(worst, std::abs(emp - mu));
    }
    return worst;
}

} // namespace polyrate
