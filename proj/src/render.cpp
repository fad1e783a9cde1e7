#include "olgtax/render.hpp"

#include <cmath>
#include <cstdio>

namespace olgtax {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    return fmt17(v);
}

}  // namespace olgtax
