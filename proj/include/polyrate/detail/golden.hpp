#pragma once

#include <cmath>
#include <utility>

namespace polyrate::detail {

// Golden-section maximization of a unimodal function on [a, b].
// Returns {argmax, max}. Shrinks the bracket to the given width.
template <class F>
std::pair<double, double> golden_max(F&& f, double a, double b, double width = 1e-12)
{
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > width) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    double xm = 0.5 * (a + b);
    double fm = f(xm);
    if (f1 > fm && f1 > f2) return {x1, f1};
    if (f2 > fm) return {x2, f2};
    return {xm, fm};
}

} // namespace polyrate::detail
