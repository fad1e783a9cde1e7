#pragma once

#include "olgtax/params.hpp"

#include <iosfwd>
#include <string>

namespace olgtax {

struct ScenarioError : ParamError {
    using ParamError::ParamError;
};

struct SimSettings {
    int max_periods = 10000;
    double tol = 1e-12;
};

// A scenario file is flat "name = value" text with '#' comments. The 13
// ModelParams fields are required; k0, p0, max_periods, tol are optional.
// p0 defaults to the analytic steady-state pollution stock, so a default
// simulation starts on the pollution fixed point.
struct Scenario {
    ModelParams params{};
    double k0 = 0.01;
    double p0 = 0.0;
    SimSettings sim;
};

Scenario parse_scenario(std::istream& in);
Scenario load_scenario(const std::string& path);

// Canonical echo: every key, one per line, values at full precision.
// Re-ingesting the echo reproduces the scenario exactly.
std::string render_scenario(const Scenario& sc);

}  // namespace olgtax
