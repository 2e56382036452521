#pragma once

#include <charconv>
#include <string>

#include "hartogs/log_value.hpp"

namespace hartogs {

// shortest round-trip decimal representation
inline std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string fmt_int(long long v) { return std::to_string(v); }

// log-space values are emitted as a (log_magnitude, sign) column pair
inline std::string fmt_log_pair(const LogValue& v) {
    return fmt_double(v.logmag) + "," + std::to_string(v.sign);
}

}  // namespace hartogs
