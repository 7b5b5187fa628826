#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace bkl {

// Bracketed scalar root finding: bisection to ~1e-12, then a few secant
// polish steps confined to the bracket. Unconditionally convergent for any
// continuous f with a sign change on [a, b]; the secant tail recovers close
// to machine precision on smooth functions without risking escape.
template <class F>
double solve_bracketed(F&& f, double a, double b, double xtol = 1e-12) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw std::runtime_error("solve_bracketed: root not bracketed on [" +
                                 std::to_string(a) + ", " + std::to_string(b) + "]");
    while (b - a > xtol) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;  // bracket at rounding resolution
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
            fb = fm;
        }
    }
    // Secant refinement from the current bracket endpoints.
    double x0 = a, f0 = fa;
    double x1 = b, f1 = fb;
    for (int i = 0; i < 8; ++i) {
        const double denom = f1 - f0;
        if (denom == 0.0) break;
        const double x2 = x1 - f1 * (x1 - x0) / denom;
        if (!(x2 >= a && x2 <= b)) break;
        const double f2 = f(x2);
        x0 = x1; f0 = f1;
        x1 = x2; f1 = f2;
        if (f2 == 0.0 || x1 == x0) break;
    }
    return std::abs(f1) <= std::abs(f0) ? x1 : x0;
}

}  // namespace bkl
