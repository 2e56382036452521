#include "hartogs/annulus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hartogs/quadrature.hpp"

namespace hartogs {

namespace {
constexpr double kPi = std::numbers::pi;

// log(b^m - a^m) as LogValue, m any nonzero integer-ish exponent, 0 < a < b.
LogValue pow_diff(double log_a, double log_b, double m) {
    double X = m * log_b, Y = m * log_a;
    if (m > 0) return LogValue::from_log(log_diff_exp(X, Y), +1);
    return LogValue::from_log(log_diff_exp(Y, X), -1);
}
}  // namespace

Annulus::Annulus(double a_, double b_) : a(a_), b(b_) {
    if (!(a > 0.0) || !(b > a) || !std::isfinite(b))
        throw std::invalid_argument("Annulus requires 0 < a < b < inf");
}

double Annulus::boundary_distance(double r) const {
    return std::min(r - a, b - r);
}

LogValue radial_moment(const Annulus& A, int n) {
    double la = std::log(A.a), lb = std::log(A.b);
    if (n == -1) return LogValue::from_value(2.0 * kPi * (lb - la));
    LogValue diff = pow_diff(la, lb, 2.0 * n + 2.0);
    LogValue coef = LogValue::from_value(kPi / (n + 1.0));
    return coef * diff;
}

LogValue distance_moment(const Annulus& A, int n) {
    if (n == -1 || n == -2) {
        // no closed form at these indices; radial quadrature in two pieces
        double c = A.center_radius();
        auto inner = [&](double r) {
            double d = r - A.a;
            return 2.0 * kPi * d * d * std::pow(r, 2.0 * n + 1.0);
        };
        auto outer = [&](double r) {
            double d = A.b - r;
            return 2.0 * kPi * d * d * std::pow(r, 2.0 * n + 1.0);
        };
        auto q1 = integrate_adaptive(inner, A.a, c);
        auto q2 = integrate_adaptive(outer, c, A.b);
        return LogValue::from_value(q1.value + q2.value);
    }
    double la = std::log(A.a), lb = std::log(A.b);
    double lc = std::log(A.center_radius());
    // pi (b^(2n+4)-a^(2n+4)) / ((n+1)(n+2)(2n+3))
    LogValue t1 = pow_diff(la, lb, 2.0 * n + 4.0) *
                  LogValue::from_value(kPi / ((n + 1.0) * (n + 2.0) * (2.0 * n + 3.0)));
    // pi c^(2n+2) (b^2-a^2) / ((n+1)(2n+3))
    LogValue t2 = LogValue::from_log((2.0 * n + 2.0) * lc, +1) *
                  LogValue::from_value(kPi * (A.b * A.b - A.a * A.a) /
                                       ((n + 1.0) * (2.0 * n + 3.0)));
    return t1 - t2;
}

double moment_ratio(const Annulus& A, int n) {
    if (n == 0) throw std::invalid_argument("moment_ratio requires n != 0");
    LogValue d = distance_moment(A, n);
    LogValue r = radial_moment(A, n);
    return double(n) * double(n) * std::exp(d.logmag - r.logmag);
}

double lemma1_constant(const Annulus& A, const std::vector<int>& n_range) {
    if (n_range.empty())
        throw std::invalid_argument("lemma1_constant: empty range");
    double sup = 0.0;
    for (int n : n_range) {
        if (n == 0) throw std::invalid_argument("lemma1_constant: range must exclude 0");
        sup = std::max(sup, moment_ratio(A, n));
    }
    return sup;
}

}  // namespace hartogs
