#pragma once

#include "olgtax/params.hpp"

#include <string>

namespace olgtax {

// Classification of the tax rate against the two recycling cutoffs:
//   I   tau <= tau_cutoff_u   (any recycling lowers both output and welfare)
//   II  tau_cutoff_u < tau <= tau_cutoff_y   (interior welfare maximizer, output maximized at 0)
//   III tau > tau_cutoff_y    (interior maximizers for both)
enum class Regime { I = 1, II = 2, III = 3 };

struct PolicyReport {
    double tau_cutoff_y = 0.0;
    double tau_cutoff_u = 0.0;
    double beta_hat = 0.0;    // output-maximizing recycling share
    double beta_hat_u = 0.0;  // welfare-maximizing recycling share
    Regime regime = Regime::I;
    double gap = 0.0;         // beta_hat_u - beta_hat; zero in regime I, beta_hat_u in regime II
    // With phi*gamma*epsilon == 0 the health feedback is off, both objectives
    // increase in beta everywhere, and the "maximizers" are the supremum 1,
    // which the admissible range beta in [0,1) never attains.
    bool no_interior_maximizer = false;
};

// Finite-difference signs of d beta_hat / d {alpha, tau, phi, epsilon, gamma},
// each in {-1, 0, +1}.
struct ComparativeStatics {
    int d_alpha = 0;
    int d_tau = 0;
    int d_phi = 0;
    int d_epsilon = 0;
    int d_gamma = 0;
};

// d y*/d beta at the given recycling share (p.beta is ignored):
//   y*(beta) { alpha tau / [(1-alpha)((1-alpha)(1-tau)+beta tau)] - pge/(1-beta) }
double dy_dbeta(const ModelParams& p, double beta);

// d U*/d beta:
//   tau (1+alpha delta-delta) / [((1-alpha)(1-tau)+beta tau)(1-alpha)(1-delta)]
//   - pge / [(1-delta)(1-beta)]
// Requires tau < 1.
double du_dbeta(const ModelParams& p, double beta);

// Smallest tax rate at which the output-maximizing recycling share turns positive.
double tau_cutoff_y(const ModelParams& p);
// Same for the welfare-maximizing share; never exceeds tau_cutoff_y.
double tau_cutoff_u(const ModelParams& p);

// Closed-form maximizers; 0 when tau is at or below the matching cutoff.
double beta_hat(const ModelParams& p);
double beta_hat_u(const ModelParams& p);

PolicyReport classify(const ModelParams& p);

// Closed form for beta_hat_u - beta_hat, valid in regime III only.
double gap(const ModelParams& p);

// Requires regime III, and every bumped parameter set must stay valid and in
// regime III; violations throw ParamError naming the parameter.
ComparativeStatics comparative_statics(const ModelParams& p, double bump = 1e-5);

const char* regime_name(Regime r);

// Flat JSON object; field order tau_cutoff_y, tau_cutoff_u, beta_hat,
// beta_hat_u, regime, gap. The degenerate no-feedback case appends
// "no_interior_maximizer":true.
std::string to_json(const PolicyReport& r);

}  // namespace olgtax
