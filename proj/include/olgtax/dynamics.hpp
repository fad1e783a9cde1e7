#pragma once

#include "olgtax/params.hpp"

#include <iosfwd>
#include <limits>
#include <vector>

namespace olgtax {

// One period of the economy, per worker.
struct EconState {
    int t = 0;
    double k = 0.0;          // capital
    double pollution = 0.0;  // pollution stock P
    double health = 0.0;     // public health h = eta theta / (xi P^phi)
    double y = 0.0;          // output A k^alpha h^{epsilon(1-alpha)}
    double wage = 0.0;       // w = (1-alpha)(1-tau) y
    double interest = 0.0;   // R = alpha (1-tau) y / k
    double c_young = 0.0;    // first-period consumption
    double savings = 0.0;    // s = delta (w + beta tau y); becomes next period's capital
};

struct Trajectory {
    std::vector<EconState> states;  // states[i].t == i
    bool converged = false;
    // max(|k_T - k_{T-1}|, |P_T - P_{T-1}|) at the final step; +inf if no step was taken.
    double residual = std::numeric_limits<double>::infinity();
};

// Forward simulation produced a non-finite quantity; carries the last state
// that was still finite.
struct DivergenceError : NumericError {
    DivergenceError(const std::string& msg, const EconState& last)
        : NumericError(msg), last_finite(last) {}
    EconState last_finite;
};

// Period-0 state from initial capital and pollution; health and the flow
// quantities are filled in consistently. k0, p0 must be finite and positive.
EconState initial_state(const ModelParams& p, double k0, double p0);

// One step of the transition system:
//   P' = (z/((1-beta) tau))^gamma + (1-mu) P
//   h' = eta theta / (xi P'^phi)
//   k' = delta [(1-alpha)(1-tau) + beta tau] y       (current output)
// then output, factor prices, consumption and savings at the new state.
// Throws NumericError naming the first non-finite quantity.
EconState step(const ModelParams& p, const EconState& s);

// Iterates step() until max(|dk|, |dP|) <= tol or max_periods steps were taken.
Trajectory simulate(const ModelParams& p, double k0, double p0,
                    int max_periods = 10000, double tol = 1e-12);

// Lifetime utility ln c1_t + ln(R_{t+1} s_t)/(1+rho) of the cohort born at
// s_t.t; s_t1 must be the following period. Savings earn the interest factor
// of the period in which they are consumed.
double cohort_welfare(const ModelParams& p, const EconState& s_t, const EconState& s_t1);

// CSV with header t,k,P,h,y,w,R,c1,s and one row per period, full precision.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

}  // namespace olgtax
