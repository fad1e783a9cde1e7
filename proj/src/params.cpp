#include "olgtax/params.hpp"

#include <cmath>
#include <string>

namespace olgtax {

namespace {

void require_finite(const char* name, double v) {
    if (!std::isfinite(v)) throw ParamError(std::string(name) + " must be finite");
}

void require(bool ok, const char* msg) {
    if (!ok) throw ParamError(msg);
}

}  // namespace

ModelParams validate(const ModelParams& raw) {
    require_finite("alpha", raw.alpha);
    require_finite("tau", raw.tau);
    require_finite("beta", raw.beta);
    require_finite("gamma", raw.gamma);
    require_finite("mu", raw.mu);
    require_finite("z", raw.z);
    require_finite("theta", raw.theta);
    require_finite("eta", raw.eta);
    require_finite("xi", raw.xi);
    require_finite("phi", raw.phi);
    require_finite("epsilon", raw.epsilon);
    require_finite("rho", raw.rho);
    require_finite("a_tfp", raw.a_tfp);

    require(raw.alpha > 0.0 && raw.alpha < 1.0, "alpha must be in (0,1)");
    require(raw.tau > 0.0 && raw.tau <= 1.0, "tau must be in (0,1]");
    require(raw.beta >= 0.0 && raw.beta < 1.0, "beta must be in [0,1)");
    require(raw.gamma > 0.0, "gamma must be > 0");
    require(raw.mu > 0.0 && raw.mu < 1.0, "mu must be in (0,1)");
    require(raw.z > 0.0 && raw.z < 1.0, "z must be in (0,1)");
    require(raw.theta > 0.0, "theta must be > 0");
    require(raw.eta > 0.0, "eta must be > 0");
    require(raw.xi > 0.0, "xi must be > 0");
    require(raw.phi >= 0.0, "phi must be >= 0");
    require(raw.epsilon >= 0.0, "epsilon must be >= 0");
    require(raw.rho > 0.0, "rho must be > 0");
    require(raw.a_tfp > 0.0, "a_tfp must be > 0");

    return raw;
}

DerivedParams derive(const ModelParams& p) {
    DerivedParams d;
    d.delta = 1.0 / (2.0 + p.rho);
    d.phi_gamma_eps = p.phi * p.gamma * p.epsilon;
    const double ax = p.alpha / (1.0 - p.alpha);
    d.phi_big = std::pow(p.a_tfp, 1.0 / (1.0 - p.alpha))
              * std::pow(d.delta, ax)
              * std::pow(p.eta * p.theta * std::pow(p.mu, p.phi) / p.xi, p.epsilon)
              * std::pow(p.tau / p.z, d.phi_gamma_eps);
    return d;
}

}  // namespace olgtax
