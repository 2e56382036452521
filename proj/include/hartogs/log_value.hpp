#pragma once

#include <cmath>
#include <limits>

namespace hartogs {

// Signed magnitude in log space: represents sign * exp(logmag).
// Zero is sign == 0 with logmag == -inf.  Needed for b^(2n+2)-scale
// quantities with n up to a few hundred, where doubles overflow.
struct LogValue {
    double logmag = -std::numeric_limits<double>::infinity();
    int sign = 0;

    static LogValue zero() { return {}; }

    static LogValue from_value(double v) {
        if (v == 0.0) return {};
        return {std::log(std::abs(v)), v > 0 ? 1 : -1};
    }

    static LogValue from_log(double lm, int s = 1) {
        if (s == 0) return {};
        return {lm, s > 0 ? 1 : -1};
    }

    double value() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(logmag);
    }

    bool is_zero() const { return sign == 0; }

    LogValue operator*(const LogValue& o) const {
        if (sign == 0 || o.sign == 0) return {};
        return {logmag + o.logmag, sign * o.sign};
    }

    LogValue operator/(const LogValue& o) const {
        if (sign == 0) return {};
        return {logmag - o.logmag, sign * o.sign};
    }

    LogValue operator-() const { return {logmag, -sign}; }

    LogValue operator+(const LogValue& o) const;
    LogValue operator-(const LogValue& o) const { return *this + (-o); }
};

inline LogValue LogValue::operator+(const LogValue& o) const {
    if (sign == 0) return o;
    if (o.sign == 0) return *this;
    const LogValue& hi = (logmag >= o.logmag) ? *this : o;
    const LogValue& lo = (logmag >= o.logmag) ? o : *this;
    double d = lo.logmag - hi.logmag;  // <= 0
    if (hi.sign == lo.sign) return {hi.logmag + std::log1p(std::exp(d)), hi.sign};
    double m = -std::expm1(d);  // 1 - exp(d) in (0,1]
    if (m == 0.0) return {};
    return {hi.logmag + std::log(m), hi.sign};
}

// log(exp(x) - exp(y)) for x > y, stable for x close to y.
inline double log_diff_exp(double x, double y) {
    return x + std::log1p(-std::exp(y - x));
}

}  // namespace hartogs
