#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "polyrate/detail/golden.hpp"
#include "polyrate/errors.hpp"

namespace polyrate {

namespace cheb {

/// Evaluate a Chebyshev series by backward (Clenshaw) recurrence.
inline double eval(const std::vector<double>& c, double x)
{
    double b1 = 0.0, b2 = 0.0;
    for (size_t k = c.size(); k-- > 1;) {
        const double b0 = 2.0 * x * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + (c.empty() ? 0.0 : c[0]);
}

/// Coefficients of the derivative of a Chebyshev series.
inline std::vector<double> derivative(const std::vector<double>& c)
{
    const int d = static_cast<int>(c.size()) - 1;
    if (d <= 0) return {0.0};
    std::vector<double> out(d, 0.0);
    double bkp1 = 0.0, bkp2 = 0.0; // out[k+1], out[k+2] while sweeping down
    for (int k = d; k >= 1; --k) {
        const double bk = bkp2 + 2.0 * k * c[k];
        out[k - 1] = bk;
        bkp2 = bkp1;
        bkp1 = bk;
    }
    out[0] *= 0.5;
    return out;
}

} // namespace cheb

/// Best sup-norm polynomial approximation found by the exchange iteration.
struct RemezResult {
    std::vector<double> coeffs;              // Chebyshev basis, degree = size-1
    double error = 0.0;                      // achieved ||f - p||_inf
    std::vector<double> alternation_points;  // final reference, ascending
    bool converged = false;
    int iterations = 0;
    bool sandwich_ok = true;                 // min |r(ref)| <= error each iteration
};

namespace detail {

// Dense Gaussian elimination with partial pivoting; A is row-major m x m.
inline std::vector<double> solve_dense(std::vector<double> A, std::vector<double> b)
{
    const int m = static_cast<int>(b.size());
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::abs(A[r * m + col]) > std::abs(A[piv * m + col])) piv = r;
        if (A[piv * m + col] == 0.0) throw numerical_error("solve_dense: singular system");
        if (piv != col) {
            for (int c = 0; c < m; ++c) std::swap(A[piv * m + c], A[col * m + c]);
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < m; ++r) {
            const double fac = A[r * m + col] / A[col * m + col];
            if (fac == 0.0) continue;
            for (int c = col; c < m; ++c) A[r * m + c] -= fac * A[col * m + c];
            b[r] -= fac * b[col];
        }
    }
    std::vector<double> x(m);
    for (int r = m - 1; r >= 0; --r) {
        double acc = b[r];
        for (int c = r + 1; c < m; ++c) acc -= A[r * m + c] * x[c];
        x[r] = acc / A[r * m + r];
    }
    return x;
}

} // namespace detail

/// Single-exchange Remez iteration for the minimax polynomial of the given
/// degree on [-1,1]. References start at the Chebyshev extreme points; the
/// global residual extremum is located on a 4001-point grid with
/// golden-section refinement.
inline RemezResult remez(const std::function<double(double)>& f, int degree, double tol = 1e-12)
{
    if (degree < 0) throw precondition_error("remez: degree must be nonnegative");
    if (tol < 1e-12) throw precondition_error("remez: tol must be >= 1e-12");
    const int m = degree + 2;

    std::vector<double> refs(m);
    for (int k = 0; k < m; ++k) refs[k] = -std::cos(M_PI * k / (m - 1));
    refs.front() = -1.0;
    refs.back() = 1.0;

    RemezResult res;
    std::vector<double> coeffs(degree + 1, 0.0);
    double lev = 0.0;

    auto residual = [&](double x) { return f(x) - cheb::eval(coeffs, x); };

    for (int it = 1; it <= 100; ++it) {
        res.iterations = it;

        // levelled interpolation on the current reference
        std::vector<double> A(m * m), b(m);
        for (int k = 0; k < m; ++k) {
            double tm1 = 1.0, t = refs[k];
            for (int j = 0; j <= degree; ++j) {
                A[k * m + j] = tm1;
                const double tn = 2.0 * refs[k] * t - tm1;
                tm1 = t;
                t = tn;
            }
            A[k * m + degree + 1] = (k % 2 == 0) ? 1.0 : -1.0;
            b[k] = f(refs[k]);
        }
        auto sol = detail::solve_dense(std::move(A), std::move(b));
        coeffs.assign(sol.begin(), sol.begin() + degree + 1);
        lev = std::abs(sol[degree + 1]);

        // global extremum of |residual|
        double xstar = -1.0, rstar = std::abs(residual(-1.0));
        const int grid = 4000;
        for (int i = 1; i <= grid; ++i) {
            const double x = -1.0 + 2.0 * i / grid;
            const double r = std::abs(residual(x));
            if (r > rstar) {
                rstar = r;
                xstar = x;
            }
        }
        {
            const double lo = std::max(-1.0, xstar - 2.0 / grid);
            const double hi = std::min(1.0, xstar + 2.0 / grid);
            auto [xr, vr] =
                detail::golden_max([&](double x) { return std::abs(residual(x)); }, lo, hi);
            if (vr > rstar) {
                rstar = vr;
                xstar = xr;
            }
        }

        // de la Vallee Poussin sandwich: min |r| on the reference bounds the
        // true minimax error from below, the global extremum from above
        double refmin = std::numeric_limits<double>::infinity();
        for (double r : refs) refmin = std::min(refmin, std::abs(residual(r)));
        if (refmin > rstar + 1e-12 * (1.0 + rstar)) res.sandwich_ok = false;

        res.error = rstar;
        if (rstar - lev <= tol * std::max(1.0, rstar)) {
            res.converged = true;
            break;
        }

        // single-point exchange preserving sign alternation
        const double sstar = (residual(xstar) >= 0.0) ? 1.0 : -1.0;
        auto sign_at = [&](int k) { return residual(refs[k]) >= 0.0 ? 1.0 : -1.0; };
        if (xstar < refs.front()) {
            if (sign_at(0) == sstar) {
                refs.front() = xstar;
            } else {
                refs.pop_back();
                refs.insert(refs.begin(), xstar);
            }
        } else if (xstar > refs.back()) {
            if (sign_at(m - 1) == sstar) {
                refs.back() = xstar;
            } else {
                refs.erase(refs.begin());
                refs.push_back(xstar);
            }
        } else {
            int i = static_cast<int>(std::upper_bound(refs.begin(), refs.end(), xstar) -
                                     refs.begin()) - 1;
            i = std::clamp(i, 0, m - 2);
            if (sign_at(i) == sstar) {
                refs[i] = xstar;
            } else {
                refs[i + 1] = xstar;
            }
        }
    }

    res.coeffs = coeffs;
    res.alternation_points = refs;
    return res;
}

/// Per-degree minimax errors.
inline std::vector<std::pair<int, double>>
best_error_sweep(const std::function<double(double)>& f, const std::vector<int>& degrees,
                 double tol = 1e-12)
{
    std::vector<std::pair<int, double>> out;
    int prev = -1;
    for (int d : degrees) {
        if (d <= prev) throw precondition_error("best_error_sweep: degrees must increase");
        prev = d;
        out.emplace_back(d, remez(f, d, tol).error);
    }
    return out;
}

} // namespace polyrate
