#include "olgtax/policy.hpp"

#include "olgtax/render.hpp"
#include "olgtax/steady_state.hpp"

#include <cmath>
#include <string>

namespace olgtax {

namespace {

double pge(const ModelParams& p) { return p.phi * p.gamma * p.epsilon; }

void require_beta(double beta) {
    if (!(beta >= 0.0 && beta < 1.0)) throw ParamError("beta must be in [0,1)");
}

}  // namespace

double dy_dbeta(const ModelParams& p, double beta) {
    require_beta(beta);
    ModelParams q = p;
    q.beta = beta;
    const double y = solve_steady_state(q).y_star;
    const double income_share = (1.0 - p.alpha) * (1.0 - p.tau) + beta * p.tau;
    return y * (p.alpha * p.tau / ((1.0 - p.alpha) * income_share) - pge(p) / (1.0 - beta));
}

double du_dbeta(const ModelParams& p, double beta) {
    require_beta(beta);
    if (p.tau >= 1.0) throw NumericError("du_dbeta requires tau < 1; welfare is -inf at tau = 1");
    const double delta = 1.0 / (2.0 + p.rho);
    const double income_share = (1.0 - p.alpha) * (1.0 - p.tau) + beta * p.tau;
    return p.tau * (1.0 + p.alpha * delta - delta) /
               (income_share * (1.0 - p.alpha) * (1.0 - delta)) -
           pge(p) / ((1.0 - delta) * (1.0 - beta));
}

double tau_cutoff_y(const ModelParams& p) {
    const double g = pge(p);
    const double la2 = (1.0 - p.alpha) * (1.0 - p.alpha);
    return g * la2 / (p.alpha + g * la2);
}

double tau_cutoff_u(const ModelParams& p) {
    const double g = pge(p);
    const double la2 = (1.0 - p.alpha) * (1.0 - p.alpha);
    const double delta = 1.0 / (2.0 + p.rho);
    return g * la2 / (delta * p.alpha + 1.0 - delta + g * la2);
}

double beta_hat(const ModelParams& p) {
    if (!(p.tau > tau_cutoff_y(p))) return 0.0;
    const double g = pge(p);
    const double a = p.alpha / (1.0 - p.alpha);
    return (a - g * (1.0 - p.alpha) * (1.0 / p.tau - 1.0)) / (a + g);
}

double beta_hat_u(const ModelParams& p) {
    if (!(p.tau > tau_cutoff_u(p))) return 0.0;
    const double g = pge(p);
    const double a = p.alpha / (1.0 - p.alpha);
    const double delta = 1.0 / (2.0 + p.rho);
    return (a + 1.0 - delta - g * (1.0 - p.alpha) * (1.0 / p.tau - 1.0)) /
           (a + g + 1.0 - delta);
}

PolicyReport classify(const ModelParams& p) {
    PolicyReport r;
    r.tau_cutoff_y = tau_cutoff_y(p);
    r.tau_cutoff_u = tau_cutoff_u(p);
    r.beta_hat = beta_hat(p);
    r.beta_hat_u = beta_hat_u(p);
    // A tax exactly at a cutoff stays in the lower regime.
    r.regime = p.tau <= r.tau_cutoff_u ? Regime::I
             : p.tau <= r.tau_cutoff_y ? Regime::II
                                       : Regime::III;
    r.gap = r.beta_hat_u - r.beta_hat;
    r.no_interior_maximizer = pge(p) == 0.0;
    return r;
}

double gap(const ModelParams& p) {
    if (!(p.tau > tau_cutoff_y(p)))
        throw ParamError("gap is defined only above tau_cutoff_y (regime III)");
    const double g = pge(p);
    const double a = p.alpha / (1.0 - p.alpha);
    const double delta = 1.0 / (2.0 + p.rho);
    return g * (1.0 - delta) * (p.tau + (1.0 - p.alpha) * (1.0 - p.tau)) /
           (p.tau * (a + g + 1.0 - delta) * (a + g));
}

ComparativeStatics comparative_statics(const ModelParams& p, double bump) {
    if (!(std::isfinite(bump) && bump > 0.0)) throw ParamError("bump must be finite and > 0");
    if (!(p.tau > tau_cutoff_y(p)))
        throw ParamError("comparative_statics requires tau above tau_cutoff_y (regime III)");

    struct Field {
        const char* name;
        double ModelParams::* member;
    };
    const Field fields[] = {
        {"alpha", &ModelParams::alpha}, {"tau", &ModelParams::tau},
        {"phi", &ModelParams::phi},     {"epsilon", &ModelParams::epsilon},
        {"gamma", &ModelParams::gamma},
    };

    int signs[5];
    for (int i = 0; i < 5; ++i) {
        ModelParams up = p;
        ModelParams dn = p;
        up.*(fields[i].member) += bump;
        dn.*(fields[i].member) -= bump;
        try {
            validate(up);
            validate(dn);
        } catch (const ParamError&) {
            throw ParamError(std::string("comparative_statics: bump leaves the valid range for ") +
                             fields[i].name);
        }
        if (!(up.tau > tau_cutoff_y(up)) || !(dn.tau > tau_cutoff_y(dn)))
            throw ParamError(std::string("comparative_statics: bump exits regime III for ") +
                             fields[i].name);
        const double d = (beta_hat(up) - beta_hat(dn)) / (2.0 * bump);
        signs[i] = (d > 0.0) - (d < 0.0);
    }
    return {signs[0], signs[1], signs[2], signs[3], signs[4]};
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::I: return "I";
        case Regime::II: return "II";
        default: return "III";
    }
}

std::string to_json(const PolicyReport& r) {
    std::string out = "{\"tau_cutoff_y\":" + json_number(r.tau_cutoff_y) +
                      ",\"tau_cutoff_u\":" + json_number(r.tau_cutoff_u) +
                      ",\"beta_hat\":" + json_number(r.beta_hat) +
                      ",\"beta_hat_u\":" + json_number(r.beta_hat_u) +
                      ",\"regime\":\"" + regime_name(r.regime) + "\"" +
                      ",\"gap\":" + json_number(r.gap);
    if (r.no_interior_maximizer) out += ",\"no_interior_maximizer\":true";
    out += "}";
    return out;
}

}  // namespace olgtax
