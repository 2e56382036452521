#pragma once

// Test-side quadrature oracle, independent of the library's adaptive Gauss
// panels: recursive adaptive Simpson with absolute/relative refinement.

#include <cmath>
#include <functional>

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adapt(const std::function<double(double)>& f, double a, double b,
                    double fa, double fm, double fb, double whole, double tol,
                    int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(f, a, m, fa, flm, fm);
    double right = simpson(f, m, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// integral of f over [a,b]
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-11) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = simpson(f, a, b, fa, fm, fb);
    double tol = rel_tol * std::max(std::abs(whole), 1e-30);
    return adapt(f, a, b, fa, fm, fb, whole, tol, 48);
}

// radial moment of |w|^(2n) over A(a,b) by the oracle
inline double radial_moment(double a, double b, int n, double rel_tol = 1e-12) {
    return integrate(
        [&](double r) { return 2.0 * M_PI * std::pow(r, 2.0 * n + 1.0); }, a, b,
        rel_tol);
}

// distance moment of dist^2 |w|^(2n) over A(a,b) by the oracle
inline double distance_moment(double a, double b, int n, double rel_tol = 1e-12) {
    double c = 0.5 * (a + b);
    auto lo = [&](double r) {
        double d = r - a;
        return 2.0 * M_PI * d * d * std::pow(r, 2.0 * n + 1.0);
    };
    auto hi = [&](double r) {
        double d = b - r;
        return 2.0 * M_PI * d * d * std::pow(r, 2.0 * n + 1.0);
    };
    return integrate(lo, a, c, rel_tol) + integrate(hi, c, b, rel_tol);
}

}  // namespace oracle
