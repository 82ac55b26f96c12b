#pragma once

#include <cstdio>
#include <string>

namespace zmom {

// 15-significant-digit decimal form used by every text artifact.
inline std::string fmt15(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

} // namespace zmom
