#pragma once

#include "olgtax/params.hpp"

#include <functional>

namespace olgtax {

struct ScalarMaxResult {
    double arg_max = 0.0;
    double max_value = 0.0;
    int evaluations = 0;
    double bracket_width = 0.0;
};

// Maximizes a unimodal objective over [0, 1-1e-9]: a 1024-point scan brackets
// the maximizer (boundary maxima included), then golden-section search shrinks
// the bracket to tol. arg_max is the best evaluated point, so a maximum at 0
// is returned exactly. Throws NumericError if the objective goes non-finite.
ScalarMaxResult maximize_on_unit_interval(const std::function<double(double)>& objective,
                                          double tol = 1e-9);

// Central difference (f(x+h) - f(x-h)) / (2h). Evaluation failures propagate.
double central_diff(const std::function<double(double)>& f, double x, double h = 1e-6);

}  // namespace olgtax
