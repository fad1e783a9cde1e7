#include "olgtax/steady_state.hpp"

#include <cmath>
#include <limits>

namespace olgtax {

SteadyState solve_steady_state(const ModelParams& p) {
    const DerivedParams d = derive(p);
    // Emissions/abatement ratio zY / ((1-beta) tau Y): output cancels.
    const double ed_ratio = p.z / ((1.0 - p.beta) * p.tau);
    // Household income share of output: after-tax labor share plus the transfer.
    const double income_share = (1.0 - p.alpha) * (1.0 - p.tau) + p.beta * p.tau;

    SteadyState s;
    s.p_star = std::pow(ed_ratio, p.gamma) / p.mu;
    s.h_star = p.eta * p.theta / (p.xi * std::pow(s.p_star, p.phi));
    s.y_star = d.phi_big * std::pow(income_share, p.alpha / (1.0 - p.alpha))
             * std::pow(1.0 - p.beta, d.phi_gamma_eps);
    s.k_star = d.delta * income_share * s.y_star;
    s.w_star = (1.0 - p.alpha) * (1.0 - p.tau) * s.y_star;
    s.c1_star = (1.0 - d.delta) * income_share * s.y_star;
    s.c2_star = p.alpha * (1.0 - p.tau) * s.y_star;  // R* k*, by the factor-price identity
    s.u_star = p.tau < 1.0 ? welfare(p)
                           : -std::numeric_limits<double>::infinity();
    return s;
}

double welfare(const ModelParams& p) {
    if (p.tau >= 1.0)
        throw NumericError("welfare: old-age consumption is zero at tau = 1; welfare -inf");
    const DerivedParams d = derive(p);
    const double income_share = (1.0 - p.alpha) * (1.0 - p.tau) + p.beta * p.tau;
    const double om = 1.0 - d.delta;
    // Computed in logs so large Phi^{1/(1-delta)} cannot overflow.
    return std::log1p(-d.delta)
         + std::log(d.phi_big) / om
         + d.delta / om * std::log(p.alpha * (1.0 - p.tau))
         + (p.alpha / ((1.0 - p.alpha) * om) + 1.0) * std::log(income_share)
         + d.phi_gamma_eps / om * std::log1p(-p.beta);
}

}  // namespace olgtax
