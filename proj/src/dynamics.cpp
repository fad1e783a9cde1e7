#include "olgtax/dynamics.hpp"

#include "olgtax/render.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace olgtax {

namespace {

void check_finite(const char* name, double v, int t) {
    if (!std::isfinite(v))
        throw NumericError(std::string("non-finite ") + name + " at period " + std::to_string(t));
}

// Fills output, factor prices, consumption and savings for given stocks.
EconState close_state(const ModelParams& p, int t, double k, double pollution, double health) {
    const double delta = 1.0 / (2.0 + p.rho);
    EconState s;
    s.t = t;
    s.k = k;
    s.pollution = pollution;
    s.health = health;
    s.y = p.a_tfp * std::pow(k, p.alpha) * std::pow(health, p.epsilon * (1.0 - p.alpha));
    s.wage = (1.0 - p.alpha) * (1.0 - p.tau) * s.y;
    s.interest = p.alpha * (1.0 - p.tau) * s.y / k;
    const double income = s.wage + p.beta * p.tau * s.y;
    s.savings = delta * income;
    s.c_young = (1.0 - delta) * income;
    check_finite("pollution", s.pollution, t);
    check_finite("health", s.health, t);
    check_finite("capital", s.k, t);
    check_finite("output", s.y, t);
    check_finite("wage", s.wage, t);
    check_finite("interest", s.interest, t);
    check_finite("consumption", s.c_young, t);
    check_finite("savings", s.savings, t);
    return s;
}

}  // namespace

EconState initial_state(const ModelParams& p, double k0, double p0) {
    if (!(std::isfinite(k0) && k0 > 0.0)) throw ParamError("k0 must be finite and > 0");
    if (!(std::isfinite(p0) && p0 > 0.0)) throw ParamError("p0 must be finite and > 0");
    const double h0 = p.eta * p.theta / (p.xi * std::pow(p0, p.phi));
    return close_state(p, 0, k0, p0, h0);
}

EconState step(const ModelParams& p, const EconState& s) {
    const double delta = 1.0 / (2.0 + p.rho);
    const double ed_ratio = p.z / ((1.0 - p.beta) * p.tau);
    const double pollution = std::pow(ed_ratio, p.gamma) + (1.0 - p.mu) * s.pollution;
    const double health = p.eta * p.theta / (p.xi * std::pow(pollution, p.phi));
    const double income_share = (1.0 - p.alpha) * (1.0 - p.tau) + p.beta * p.tau;
    const double k = delta * income_share * s.y;  // savings of the current young
    return close_state(p, s.t + 1, k, pollution, health);
}

Trajectory simulate(const ModelParams& p, double k0, double p0, int max_periods, double tol) {
    if (max_periods < 0) throw ParamError("max_periods must be >= 0");
    if (!(std::isfinite(tol) && tol > 0.0)) throw ParamError("tol must be finite and > 0");

    Trajectory traj;
    traj.states.reserve(std::min(max_periods, 4096) + 1);
    traj.states.push_back(initial_state(p, k0, p0));
    for (int t = 1; t <= max_periods; ++t) {
        const EconState cur = traj.states.back();
        EconState next;
        try {
            next = step(p, cur);
        } catch (const NumericError& e) {
            throw DivergenceError(e.what(), cur);
        }
        traj.residual = std::max(std::abs(next.k - cur.k),
                                 std::abs(next.pollution - cur.pollution));
        traj.states.push_back(next);
        if (traj.residual <= tol) {
            traj.converged = true;
            break;
        }
    }
    return traj;
}

double cohort_welfare(const ModelParams& p, const EconState& s_t, const EconState& s_t1) {
    if (s_t1.t != s_t.t + 1)
        throw ParamError("cohort_welfare: states must be consecutive periods");
    const double c_old = s_t1.interest * s_t.savings;
    if (!(s_t.c_young > 0.0) || !(c_old > 0.0))
        throw NumericError("welfare undefined: nonpositive consumption for cohort " +
                           std::to_string(s_t.t));
    return std::log(s_t.c_young) + std::log(c_old) / (1.0 + p.rho);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    out << "t,k,P,h,y,w,R,c1,s\n";
    for (const EconState& s : traj.states) {
        out << s.t << ',' << fmt17(s.k) << ',' << fmt17(s.pollution) << ','
            << fmt17(s.health) << ',' << fmt17(s.y) << ',' << fmt17(s.wage) << ','
            << fmt17(s.interest) << ',' << fmt17(s.c_young) << ',' << fmt17(s.savings)
            << '\n';
    }
}

}  // namespace olgtax
