#pragma once

#include <cmath>

#include "polyrate/errors.hpp"

namespace polyrate {

/// Jacobi weight exponents; orthogonality requires alpha, beta > -1.
struct JacobiParams {
    double alpha = 0.0;
    double beta = 0.0;

    bool valid() const { return alpha > -1.0 && beta > -1.0; }
};

inline void require_valid(const JacobiParams& p)
{
    if (!p.valid())
        throw precondition_error("Jacobi parameters must satisfy alpha, beta > -1");
}

/// P_n^{(alpha,beta)}(x) by the classical three-term recurrence.
/// Stable in double precision for n up to several thousand.
inline double eval_jacobi(int n, const JacobiParams& p, double x)
{
    require_valid(p);
    if (n < 0) throw precondition_error("eval_jacobi: n must be nonnegative");
    const double a = p.alpha, b = p.beta;
    if (n == 0) return 1.0;
    double pm1 = 1.0;
    double pk = 0.5 * ((a + b + 2.0) * x + (a - b));
    for (int k = 2; k <= n; ++k) {
        const double k2ab = 2.0 * k + a + b;
        const double c1 = 2.0 * k * (k + a + b) * (k2ab - 2.0);
        const double c2 = (k2ab - 1.0) * (a * a - b * b);
        const double c3 = (k2ab - 2.0) * (k2ab - 1.0) * k2ab;
        const double c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * k2ab;
        const double pnext = ((c2 + c3 * x) * pk - c4 * pm1) / c1;
        pm1 = pk;
        pk = pnext;
    }
    return pk;
}

/// d^order/dx^order P_n^{(alpha,beta)}(x) for order in {1, 2}, via the
/// parameter-shift identity applied once or twice.
inline double eval_jacobi_derivative(int n, const JacobiParams& p, double x, int order)
{
    require_valid(p);
    if (order != 1 && order != 2)
        throw precondition_error("eval_jacobi_derivative: order must be 1 or 2");
    if (n < order) return 0.0;
    const double s = n + p.alpha + p.beta + 1.0;
    if (order == 1)
        return 0.5 * s * eval_jacobi(n - 1, {p.alpha + 1.0, p.beta + 1.0}, x);
    return 0.25 * s * (s + 1.0) * eval_jacobi(n - 2, {p.alpha + 2.0, p.beta + 2.0}, x);
}

/// Endpoint value P_n^{(alpha,beta)}(1) = C(n+alpha, n), evaluated as a
/// Gamma-function ratio in log space to avoid overflow.
inline double jacobi_at_one(int n, const JacobiParams& p)
{
    require_valid(p);
    return std::exp(std::lgamma(n + p.alpha + 1.0) - std::lgamma(p.alpha + 1.0) -
                    std::lgamma(n + 1.0));
}

/// Reflection identity P_n^{(a,b)}(x) = (-1)^n P_n^{(b,a)}(-x).
inline bool check_symmetry(int n, const JacobiParams& p, double x)
{
    const double lhs = eval_jacobi(n, p, x);
    const double rhs = eval_jacobi(n, {p.beta, p.alpha}, -x);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return std::abs(lhs - sign * rhs) <= 1e-12 * (1.0 + std::abs(lhs));
}

} // namespace polyrate
