#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "olgtax/optimize.hpp"
#include "olgtax/policy.hpp"
#include "olgtax/steady_state.hpp"
#include "test_util.hpp"

#include <cmath>
#include <cstring>
#include <functional>
#include <random>

using namespace olgtax;

namespace {

// alpha tau beta gamma mu z theta eta xi phi epsilon rho a_tfp
// phi*gamma*epsilon = 0.5 and delta = 1/3 unless overridden.
ModelParams representative(double tau) {
    return {0.5, tau, 0.0, 1.0, 0.2, 0.1, 0.5, 1.0, 0.2, 1.0, 0.5, 1.0, 1.0};
}

ModelParams canonical() {
    return {0.5, 0.5, 0.2, 1.0, 0.2, 0.1, 0.5, 1.0, 0.2, 1.0, 1.0, 2.0, 1.0};
}

// Argmax of the beta-dependent part of y*, scanned with the given step.
double grid_argmax_y(const ModelParams& p, double step) {
    const double g = p.phi * p.gamma * p.epsilon;
    const double ax = p.alpha / (1.0 - p.alpha);
    double best_b = 0.0;
    double best = -1.0;
    for (double b = 0.0; b < 1.0 - 1e-9; b += step) {
        const double income_share = (1.0 - p.alpha) * (1.0 - p.tau) + b * p.tau;
        const double v = std::pow(income_share, ax) * std::pow(1.0 - b, g);
        if (v > best) {
            best = v;
            best_b = b;
        }
    }
    return best_b;
}

// Sign-change locator for a decreasing-slope derivative on [0, 1).
double bisect_root(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((flo > 0.0) == (fm > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("relative output derivative at beta = 0") {
    // alpha tau /[(1-alpha) B] - pge = 0.25/0.125 - 0.5 = 1.5 at these values.
    const ModelParams p = validate(representative(0.5));
    const double y0 = solve_steady_state(p).y_star;
    CHECK(dy_dbeta(p, 0.0) / y0 == doctest::Approx(1.5).epsilon(1e-13));
}

TEST_CASE("output derivative: no health feedback means recycling always helps") {
    ModelParams p = representative(0.5);
    p.phi = 0.0;
    validate(p);
    for (int i = 0; i <= 50; ++i) {
        const double b = 0.98 * i / 50.0;
        CHECK(dy_dbeta(p, b) > 0.0);
        CHECK(du_dbeta(p, b) > 0.0);
    }
}

TEST_CASE("output derivative flips sign exactly at beta_hat") {
    std::mt19937 rng(701);
    for (int i = 0; i < 25; ++i) {
        const ModelParams p = testutil::draw_regime3(rng);
        const double bh = beta_hat(p);
        REQUIRE(bh > 0.0);
        CHECK(dy_dbeta(p, bh * 0.98) > 0.0);
        CHECK(dy_dbeta(p, bh + (1.0 - bh) * 0.02) < 0.0);
        const double root =
            bisect_root([&](double b) { return dy_dbeta(p, b); }, 0.0, 1.0 - 1e-9);
        CHECK(std::abs(root - bh) < 1e-9);
    }
}

TEST_CASE("welfare derivative flips sign exactly at beta_hat_u") {
    std::mt19937 rng(702);
    for (int i = 0; i < 25; ++i) {
        const ModelParams p = (i % 2 == 0) ? testutil::draw_regime3(rng)
                                           : testutil::draw_regime2(rng);
        const double bhu = beta_hat_u(p);
        REQUIRE(bhu > 0.0);
        CHECK(du_dbeta(p, bhu * 0.98) > 0.0);
        CHECK(du_dbeta(p, bhu + (1.0 - bhu) * 0.02) < 0.0);
        const double root =
            bisect_root([&](double b) { return du_dbeta(p, b); }, 0.0, 1.0 - 1e-9);
        CHECK(std::abs(root - bhu) < 1e-9);
    }
}

TEST_CASE("beta_hat: named values and the grid-argmax oracle") {
    ModelParams p = representative(0.8);
    CHECK(beta_hat(validate(p)) == doctest::Approx(0.625).epsilon(1e-14));
    CHECK(grid_argmax_y(p, 1e-6) == doctest::Approx(0.625).epsilon(2e-6));

    p = representative(0.5);
    CHECK(beta_hat(validate(p)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(grid_argmax_y(p, 1e-6) == doctest::Approx(0.5).epsilon(2e-6));

    // below the cutoff the boundary wins
    ModelParams low = {0.3, 0.2, 0.0, 1.0, 0.2, 0.1, 0.5, 1.0, 0.2, 1.0, 1.0, 2.0, 1.0};
    CHECK(tau_cutoff_y(validate(low)) == doctest::Approx(0.49 / 0.79).epsilon(1e-14));
    CHECK(beta_hat(low) == 0.0);
    CHECK(grid_argmax_y(low, 1e-4) == 0.0);
}

TEST_CASE("beta_hat_u: named values and the numerical-maximizer oracle") {
    // delta = 1/3 throughout
    ModelParams p = representative(0.5);
    validate(p);
    CHECK(beta_hat_u(p) == doctest::Approx(17.0 / 26.0).epsilon(1e-14));
    auto u_of = [&](double b) {
        ModelParams q = p;
        q.beta = b;
        return welfare(q);
    };
    CHECK(maximize_on_unit_interval(u_of).arg_max ==
          doctest::Approx(17.0 / 26.0).epsilon(1e-6));

    p = representative(0.15);
    validate(p);
    CHECK(beta_hat_u(p) == doctest::Approx(1.5 / 13.0).epsilon(1e-13));
    CHECK(beta_hat(p) == 0.0);  // regime II: output maximized at the boundary

    p = representative(0.10);
    validate(p);
    CHECK(beta_hat_u(p) == 0.0);
    CHECK(beta_hat(p) == 0.0);
}

TEST_CASE("regime classification against the cutoffs") {
    ModelParams p = representative(0.5);
    validate(p);
    const PolicyReport r3 = classify(p);
    CHECK(r3.tau_cutoff_u == doctest::Approx(3.0 / 23.0).epsilon(1e-14));
    CHECK(r3.tau_cutoff_y == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(r3.regime == Regime::III);
    CHECK_FALSE(r3.no_interior_maximizer);

    p = representative(0.15);
    CHECK(classify(validate(p)).regime == Regime::II);
    p = representative(0.10);
    CHECK(classify(validate(p)).regime == Regime::I);
    // a tax exactly at a cutoff stays in the lower regime
    p = representative(r3.tau_cutoff_y);
    CHECK(classify(validate(p)).regime == Regime::II);
    p = representative(r3.tau_cutoff_u);
    CHECK(classify(validate(p)).regime == Regime::I);
}

TEST_CASE("cutoff ordering and maximizer ordering on random draws") {
    std::mt19937 rng(703);
    for (int i = 0; i < 400; ++i) {
        const ModelParams p = testutil::draw_params(rng);
        const PolicyReport r = classify(p);
        CHECK(r.tau_cutoff_u <= r.tau_cutoff_y);
        CHECK(r.beta_hat_u >= r.beta_hat);
        CHECK(r.beta_hat >= 0.0);
        CHECK(r.beta_hat < 1.0);
        CHECK(r.beta_hat_u < 1.0);
        if (r.regime == Regime::III) CHECK(r.beta_hat > 0.0);
        if (r.regime != Regime::I) CHECK(r.beta_hat_u > 0.0);
        if (r.regime == Regime::I) CHECK(r.gap == 0.0);
        if (r.regime == Regime::II) CHECK(r.gap == r.beta_hat_u);
    }
}

TEST_CASE("gap: closed form equals the subtraction route in regime III") {
    const ModelParams p = validate(representative(0.5));
    CHECK(gap(p) == doctest::Approx(2.0 / 13.0).epsilon(1e-14));
    CHECK(gap(p) == doctest::Approx(beta_hat_u(p) - beta_hat(p)).epsilon(1e-12));

    std::mt19937 rng(704);
    for (int i = 0; i < 200; ++i) {
        const ModelParams q = testutil::draw_regime3(rng);
        CHECK(gap(q) > 0.0);
        CHECK(gap(q) == doctest::Approx(beta_hat_u(q) - beta_hat(q)).epsilon(1e-10));
    }
}

TEST_CASE("gap requires regime III and vanishes with the feedback") {
    CHECK_THROWS_AS(gap(validate(representative(0.15))), ParamError);
    ModelParams p = representative(0.5);
    p.epsilon = 1e-12;
    validate(p);
    CHECK(gap(p) < 1e-11);
    CHECK(gap(p) > 0.0);
}

TEST_CASE("degenerate case: no feedback, both maximizers are suprema") {
    ModelParams p = representative(0.5);
    p.phi = 0.0;
    validate(p);
    const PolicyReport r = classify(p);
    CHECK(r.no_interior_maximizer);
    CHECK(r.tau_cutoff_y == 0.0);
    CHECK(r.tau_cutoff_u == 0.0);
    CHECK(r.regime == Regime::III);
    CHECK(r.beta_hat == 1.0);
    CHECK(r.beta_hat_u == 1.0);
    CHECK(r.gap == 0.0);
    const std::string js = to_json(r);
    CHECK(js.find("\"no_interior_maximizer\":true") != std::string::npos);
    // the json keeps the standard six fields in order
    CHECK(js.find("\"tau_cutoff_y\":") < js.find("\"tau_cutoff_u\":"));
    CHECK(js.find("\"regime\":\"III\"") != std::string::npos);
}

TEST_CASE("comparative statics of beta_hat: signs (+,+,-,-,-)") {
    ModelParams p = canonical();
    p.epsilon = 0.5;  // pge = 0.5
    validate(p);
    const ComparativeStatics cs = comparative_statics(p, 1e-5);
    CHECK(cs.d_alpha == 1);
    CHECK(cs.d_tau == 1);
    CHECK(cs.d_phi == -1);
    CHECK(cs.d_epsilon == -1);
    CHECK(cs.d_gamma == -1);
}

TEST_CASE("comparative statics: beta_hat depends on phi, gamma, epsilon only via the product") {
    // exact powers of two make the product identical under permutation
    ModelParams p = canonical();
    p.phi = 1.0;
    p.gamma = 2.0;
    p.epsilon = 0.25;
    validate(p);
    const double ref = beta_hat(p);
    ModelParams q = p;
    q.phi = 2.0;
    q.gamma = 0.25;
    q.epsilon = 1.0;
    CHECK(beta_hat(q) == ref);
    ModelParams r = p;
    r.phi = 0.25;
    r.gamma = 1.0;
    r.epsilon = 2.0;
    CHECK(beta_hat(r) == ref);
}

TEST_CASE("comparative statics reject bumps that leave regime III or the valid range") {
    ModelParams p = canonical();
    p.epsilon = 0.5;
    validate(p);
    p.tau = tau_cutoff_y(p) + 1e-6;  // regime III, but too close to the cutoff
    CHECK_THROWS_AS(comparative_statics(p, 1e-5), ParamError);

    ModelParams q = canonical();
    q.epsilon = 0.5;
    q.tau = 1.0;  // tau + bump exits (0,1]
    validate(q);
    try {
        comparative_statics(q, 1e-5);
        FAIL("expected ParamError");
    } catch (const ParamError& e) {
        CHECK(std::strstr(e.what(), "tau") != nullptr);
    }

    CHECK_THROWS_AS(comparative_statics(validate(representative(0.15)), 1e-5), ParamError);
}

TEST_CASE("derivative contracts imply the regime sign table") {
    std::mt19937 rng(705);
    for (int i = 0; i < 60; ++i) {
        ModelParams p;
        const int which = i % 3;
        if (which == 0) p = testutil::draw_regime12(rng);
        else if (which == 1) p = testutil::draw_regime2(rng);
        else p = testutil::draw_regime3(rng);
        const PolicyReport r = classify(p);
        const double bh = r.beta_hat;
        const double bhu = r.beta_hat_u;
        for (int j = 1; j <= 20; ++j) {
            const double b = 0.97 * j / 21.0;
            const double dy = dy_dbeta(p, b);
            const double du = du_dbeta(p, b);
            const double margin = 0.005;
            if (b < bh - margin) CHECK(dy > 0.0);
            if (b > bh + margin) CHECK(dy < 0.0);
            if (b < bhu - margin) CHECK(du > 0.0);
            if (b > bhu + margin) CHECK(du < 0.0);
        }
    }
}
