#pragma once

#include <stdexcept>

namespace olgtax {

// A parameter lies outside its admissible range (or a precondition on an
// argument is violated). Message names the offending quantity.
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computed quantity left its domain (non-finite value, undefined welfare, ...).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural parameters of a two-period OLG economy in which an output tax
// tau is recycled between labor-income transfers (share beta) and pollution
// abatement (share 1-beta), and the pollution stock feeds back on labor
// productivity through public health. Population is constant, one worker per
// cohort; all quantities are per worker.
struct ModelParams {
    double alpha;    // capital share of output, in (0,1)
    double tau;      // environmental tax rate on output, in (0,1]
    double beta;     // share of tax revenue recycled to labor income, in [0,1)
    double gamma;    // elasticity of pollution wrt the emissions/abatement ratio, > 0
    double mu;       // natural pollution absorption rate, in (0,1)
    double z;        // polluting capacity of production, in (0,1)
    double theta;    // public health expenditure share, > 0
    double eta;      // productivity of the health sector, > 0
    double xi;       // scale of health damage from pollution, > 0
    double phi;      // influence of pollution on health, >= 0 (0 turns the feedback off)
    double epsilon;  // effect of health on labor productivity, >= 0
    double rho;      // subjective discount rate, > 0
    double a_tfp;    // total factor productivity, > 0
};

// Quantities implied by a validated ModelParams.
struct DerivedParams {
    double delta;          // savings propensity 1/(2+rho), in (0, 1/2)
    double phi_gamma_eps;  // phi*gamma*epsilon, overall strength of the health feedback
    // Composite steady-state output scale:
    //   A^{1/(1-alpha)} delta^{alpha/(1-alpha)} (eta theta mu^phi / xi)^epsilon (tau/z)^{phi gamma epsilon}
    double phi_big;
};

// Returns the parameter set unchanged iff every range invariant holds,
// otherwise throws ParamError naming the offending field.
ModelParams validate(const ModelParams& raw);

DerivedParams derive(const ModelParams& p);

}  // namespace olgtax
