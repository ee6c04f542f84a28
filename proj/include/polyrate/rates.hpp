#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polyrate/barycentric.hpp"
#include "polyrate/errors.hpp"
#include "polyrate/lebesgue.hpp"
#include "polyrate/peano.hpp"
#include "polyrate/pointsystems.hpp"
#include "polyrate/remez.hpp"

namespace polyrate {

/// A built-in experiment function with analytic derivatives up to order 2
/// and, for the kink functions, its regularity data.
struct TestFunction {
    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> d1;
    std::function<double(double)> d2;
    std::optional<RegularityClass> regularity;

    const std::function<double(double)>& deriv(int order) const
    {
        switch (order) {
            case 0: return f;
            case 1: return d1;
            case 2: return d2;
        }
        throw precondition_error("TestFunction: derivative order must be 0, 1 or 2");
    }
};

inline const std::vector<TestFunction>& test_function_registry()
{
    auto abspow = [](int m) {
        return TestFunction{
            "|x|^" + std::to_string(m),
            [m](double x) { return std::pow(std::abs(x), m); },
            [m](double x) {
                return x == 0.0 ? 0.0 : m * std::pow(std::abs(x), m - 1) * (x > 0 ? 1.0 : -1.0);
            },
            [m](double x) {
                return m == 1 ? 0.0 : m * (m - 1.0) * std::pow(std::abs(x), m - 2);
            },
            RegularityClass{m, 2.0 * detail::factorial(m)},
        };
    };
    static const std::vector<TestFunction> registry = [&] {
        std::vector<TestFunction> r;
        auto absx = abspow(1);
        absx.name = "|x|";
        r.push_back(absx);
        r.push_back(abspow(3));
        r.push_back(abspow(5));
        r.push_back(abspow(7));
        r.push_back({"exp", [](double x) { return std::exp(x); },
                     [](double x) { return std::exp(x); },
                     [](double x) { return std::exp(x); }, std::nullopt});
        r.push_back({"runge",
                     [](double x) { return 1.0 / (1.0 + 25.0 * x * x); },
                     [](double x) {
                         const double f = 1.0 / (1.0 + 25.0 * x * x);
                         return -50.0 * x * f * f;
                     },
                     [](double x) {
                         const double f = 1.0 / (1.0 + 25.0 * x * x);
                         return (150.0 * 25.0 * x * x - 50.0) * f * f * f;
                     },
                     std::nullopt});
        r.push_back({"exp(-1/x^2)",
                     [](double x) { return x == 0.0 ? 0.0 : std::exp(-1.0 / (x * x)); },
                     [](double x) {
                         return x == 0.0 ? 0.0 : 2.0 / (x * x * x) * std::exp(-1.0 / (x * x));
                     },
                     [](double x) {
                         if (x == 0.0) return 0.0;
                         const double x2 = x * x;
                         return (4.0 / (x2 * x2 * x2) - 6.0 / (x2 * x2)) *
                                std::exp(-1.0 / x2);
                     },
                     std::nullopt});
        return r;
    }();
    return registry;
}

inline const TestFunction& find_test_function(const std::string& name)
{
    for (const auto& tf : test_function_registry())
        if (tf.name == name) return tf;
    throw precondition_error("unknown test function: " + name);
}

/// The theoretical convergence exponent of ||f - L_n[f]||_inf for a function
/// of regularity order r at the given Jacobi-type pointsystem. The Chebyshev
/// families map to the alpha = beta = -1/2 Gauss and Lobatto cases.
inline double predicted_exponent(const PointSystemSpec& spec, const RegularityClass& reg)
{
    const double r = reg.r;
    double a = spec.params.alpha, b = spec.params.beta;
    PointFamily fam = spec.family;
    if (fam == PointFamily::ChebyshevFirst) {
        fam = PointFamily::GaussJacobi;
        a = b = -0.5;
    } else if (fam == PointFamily::ChebyshevSecond) {
        fam = PointFamily::JacobiGaussLobatto;
        a = b = -0.5;
    }
    switch (fam) {
        case PointFamily::GaussJacobi:
            return -r + std::max(0.0, std::max(a, b) - 0.5);
        case PointFamily::JacobiGaussLobatto: {
            double m;
            if (a <= 1.5 && b <= 1.5)
                m = std::min({0.0, a + 0.5, b + 0.5});
            else if (a <= 1.5)
                m = std::min({0.0, a + 0.5, 2.0 + a - b, 2.5 - b});
            else if (b <= 1.5)
                m = std::min({0.0, b + 0.5, 2.0 + b - a, 2.5 - a});
            else
                m = std::min({0.0, 2.0 + a - b, 2.0 + b - a, 2.5 - a, 2.5 - b});
            return -r - m;
        }
        case PointFamily::JacobiGaussRadauPlus1: {
            const double m = (a <= 0.5) ? std::min({0.0, a + 0.5, a - b})
                                        : std::min({0.0, 0.5 - b, 2.5 - a, a - b});
            return -r - m;
        }
        case PointFamily::JacobiGaussRadauMinus1: {
            const double m = (b <= 0.5) ? std::min({0.0, b + 0.5, b - a})
                                        : std::min({0.0, 0.5 - a, 2.5 - b, b - a});
            return -r - m;
        }
        default:
            throw precondition_error("predicted_exponent: unsupported family");
    }
}

struct RatePoint {
    int n = 0;
    double error = 0.0;
    double bound = 0.0; // error_bound value; 0 when not applicable
};

/// Per-n max-grid errors with a fitted log-log slope and a verdict against
/// the predicted exponent.
struct RateReport {
    PointSystemSpec spec;
    std::string function_name;
    int deriv_order = 0;
    std::vector<RatePoint> rows;
    double fitted_slope = 0.0;
    double predicted_slope = 0.0;
    bool has_prediction = false;
    bool exact = false; // all errors below the exactness floor
    bool verdict = false;
    double slope_tol = 0.2;
};

namespace detail {

// Slope fit on the tail of the sweep (up to the last 6 entries, spanning
// 5 doublings on a doubling sweep) to reduce preasymptotic bias.
inline double tail_slope(const std::vector<RatePoint>& rows)
{
    std::vector<std::pair<int, double>> pts;
    const size_t start = rows.size() > 6 ? rows.size() - 6 : 0;
    for (size_t i = start; i < rows.size(); ++i)
        if (rows[i].error > 0.0) pts.emplace_back(rows[i].n, rows[i].error);
    if (pts.size() < 3) return 0.0;
    return growth_exponent(pts);
}

} // namespace detail

/// Measure max-grid interpolation errors of the named function over a sweep
/// of point counts and compare the fitted slope against the rate prediction.
inline RateReport run_convergence(PointSystemSpec spec, const std::string& fn_name,
                                  const std::vector<int>& n_list, int deriv_order = 0,
                                  double grid_step = 0.001, double slope_tol = 0.2)
{
    const TestFunction& tf = find_test_function(fn_name);
    RateReport rep;
    rep.function_name = fn_name;
    rep.deriv_order = deriv_order;
    rep.slope_tol = slope_tol;

    int prev = 0;
    for (int n : n_list) {
        if (n <= prev) throw precondition_error("run_convergence: n_list must increase");
        prev = n;
        spec.n = n;
        NodeSet ns = generate_nodes(spec);
        Interpolant ip = make_interpolant(ns, tf.f);
        double err = max_grid_error(ip, tf.deriv(deriv_order), grid_step, deriv_order);
        // also sample the midpoint of the node gap nearest the kink at 0,
        // where the sup of the error for the |x|^m functions lives
        if (tf.regularity && deriv_order == 0) {
            const auto it =
                std::upper_bound(ip.nodeset.nodes.begin(), ip.nodeset.nodes.end(), 0.0);
            if (it != ip.nodeset.nodes.begin() && it != ip.nodeset.nodes.end()) {
                const double mid = 0.5 * (*(it - 1) + *it);
                err = std::max(err, std::abs(tf.f(mid) - eval_interpolant(ip, mid)));
            }
        }
        RatePoint pt;
        pt.n = n;
        pt.error = err;
        if (tf.regularity && n >= tf.regularity->r + 1 && deriv_order == 0)
            pt.bound = error_bound(ip.nodeset, *tf.regularity);
        rep.rows.push_back(pt);
    }
    rep.spec = spec;

    rep.exact = true;
    for (const auto& r : rep.rows)
        if (r.error >= 1e-11) rep.exact = false;

    if (!rep.exact) rep.fitted_slope = detail::tail_slope(rep.rows);
    if (tf.regularity && spec.family != PointFamily::Equispaced) {
        rep.predicted_slope = predicted_exponent(spec, *tf.regularity);
        rep.has_prediction = true;
        rep.verdict = !rep.exact &&
                      std::abs(rep.fitted_slope - rep.predicted_slope) <= slope_tol;
    }
    return rep;
}

struct DerivComparisonRow {
    int n = 0;
    int order = 0;
    double interp_error = 0.0;
    double remez_error = 0.0;
};

/// Side-by-side sweep of interpolant vs minimax-baseline errors for
/// derivative orders 0..2. The baseline polynomial of degree n-1 is
/// differentiated through its Chebyshev coefficients.
inline std::vector<DerivComparisonRow>
run_derivative_comparison(PointSystemSpec spec, const std::string& fn_name,
                          const std::vector<int>& n_list, const std::vector<int>& orders,
                          double grid_step = 0.001)
{
    const TestFunction& tf = find_test_function(fn_name);
    std::vector<DerivComparisonRow> rows;
    for (int n : n_list) {
        spec.n = n;
        Interpolant ip = make_interpolant(generate_nodes(spec), tf.f);
        RemezResult best = remez(tf.f, n - 1);
        std::vector<std::vector<double>> cs{best.coeffs};
        cs.push_back(cheb::derivative(cs[0]));
        cs.push_back(cheb::derivative(cs[1]));
        for (int m : orders) {
            if (m < 0 || m > 2)
                throw precondition_error("run_derivative_comparison: orders must be in {0,1,2}");
            DerivComparisonRow row;
            row.n = n;
            row.order = m;
            row.interp_error = max_grid_error(ip, tf.deriv(m), grid_step, m);
            const long steps = std::lround(2.0 / grid_step);
            double worst = 0.0;
            for (long i = 0; i <= steps; ++i) {
                const double x = -1.0 + 2.0 * static_cast<double>(i) / steps;
                worst = std::max(worst, std::abs(tf.deriv(m)(x) - cheb::eval(cs[m], x)));
            }
            row.remez_error = worst;
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace polyrate
