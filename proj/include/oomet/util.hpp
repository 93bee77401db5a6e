#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace oomet {

// Locale-independent fixed-point formatting; the one float->text path for
// every report, so bundles are byte-stable across runs.
inline std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

// Round half away from zero at `decimals` places; used before numbers are
// stored in JSON reports.
inline double round_fixed(double value, int decimals) {
    double scale = 1.0;
    for (int i = 0; i < decimals; ++i) scale *= 10.0;
    return std::round(value * scale) / scale;
}

}  // namespace oomet
