#pragma once

#include <string>

namespace olgtax {

// 17 significant digits: doubles round-trip exactly. Non-finite values render
// as inf/-inf/nan.
std::string fmt17(double v);

// fmt17, except non-finite values become JSON null.
std::string json_number(double v);

}  // namespace olgtax
