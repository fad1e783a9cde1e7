#pragma once

#include "olgtax/params.hpp"

namespace olgtax {

// Interior fixed point of the transition system, from the closed forms.
struct SteadyState {
    double p_star;   // pollution stock
    double h_star;   // public health
    double k_star;   // capital per worker
    double y_star;   // output per worker
    double w_star;   // wage
    double u_star;   // lifetime welfare of a steady-state cohort; -inf when tau == 1
    double c1_star;  // first-period consumption
    double c2_star;  // second-period consumption
};

SteadyState solve_steady_state(const ModelParams& p);

// Steady-state lifetime welfare,
//   ln[(1-delta) Phi^{1/(1-delta)} (alpha(1-tau))^{delta/(1-delta)}] + ln Omega(beta),
//   Omega(beta) = [(1-alpha)(1-tau)+beta tau]^{alpha/((1-alpha)(1-delta)) + 1} (1-beta)^{pge/(1-delta)}.
// Throws NumericError at tau == 1 (old-age consumption is zero, welfare -inf).
double welfare(const ModelParams& p);

}  // namespace olgtax
