#include "olgtax/optimize.hpp"

#include "olgtax/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace olgtax {

namespace {
// Right endpoint stays clear of the pole of the welfare objective at beta = 1.
constexpr double kRightEnd = 1.0 - 1e-9;
constexpr int kGridPoints = 1024;
constexpr double kInvGolden = 0.61803398874989485;
}  // namespace

ScalarMaxResult maximize_on_unit_interval(const std::function<double(double)>& objective,
                                          double tol) {
    if (!(std::isfinite(tol) && tol > 0.0)) throw ParamError("tol must be finite and > 0");

    ScalarMaxResult res;
    double best_x = 0.0;
    double best_f = -std::numeric_limits<double>::infinity();
    int evals = 0;
    auto eval = [&](double x) {
        const double f = objective(x);
        ++evals;
        if (!std::isfinite(f))
            throw NumericError("objective non-finite at beta = " + fmt17(x));
        if (f > best_f) {
            best_f = f;
            best_x = x;
        }
        return f;
    };

    int best_i = 0;
    double best_grid = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGridPoints; ++i) {
        const double x = kRightEnd * i / (kGridPoints - 1);
        const double f = eval(x);
        if (f > best_grid) {
            best_grid = f;
            best_i = i;
        }
    }
    double lo = kRightEnd * std::max(best_i - 1, 0) / (kGridPoints - 1);
    double hi = kRightEnd * std::min(best_i + 1, kGridPoints - 1) / (kGridPoints - 1);

    double c = hi - kInvGolden * (hi - lo);
    double d = lo + kInvGolden * (hi - lo);
    double fc = eval(c);
    double fd = eval(d);
    while (hi - lo > tol) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - kInvGolden * (hi - lo);
            fc = eval(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + kInvGolden * (hi - lo);
            fd = eval(d);
        }
    }

    res.arg_max = best_x;
    res.max_value = best_f;
    res.evaluations = evals;
    res.bracket_width = hi - lo;
    return res;
}

double central_diff(const std::function<double(double)>& f, double x, double h) {
    if (!(std::isfinite(h) && h > 0.0)) throw ParamError("h must be finite and > 0");
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace olgtax
