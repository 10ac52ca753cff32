#ifndef UOWSN_FORMAT_HPP
#define UOWSN_FORMAT_HPP

#include <cmath>
#include <cstdio>
#include <string>

namespace uowsn {

/// Scientific notation with 9 significant digits, e.g. `1.02445366e-03`.
inline std::string format_sci(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8e", value);
    return buf;
}

}  // namespace uowsn

#endif  // UOWSN_FORMAT_HPP
