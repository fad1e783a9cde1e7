#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "olgtax/params.hpp"
#include "test_util.hpp"

#include <cmath>
#include <cstring>
#include <random>

using namespace olgtax;

namespace {

ModelParams baseline() {
    // alpha tau beta gamma mu z theta eta xi phi epsilon rho a_tfp
    return {0.5, 0.5, 0.0, 1.0, 0.2, 0.1, 0.5, 1.0, 0.2, 1.0, 1.0, 2.0, 1.0};
}

bool throws_with(const ModelParams& p, const char* needle) {
    try {
        validate(p);
    } catch (const ParamError& e) {
        return std::strstr(e.what(), needle) != nullptr;
    }
    return false;
}

}  // namespace

TEST_CASE("validate accepts an interior parameter set and derive gives delta") {
    const ModelParams p = validate(baseline());
    CHECK(p.alpha == 0.5);
    CHECK(derive(p).delta == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("validate rejects out-of-range fields, naming them") {
    ModelParams p = baseline();
    p.tau = 0.0;
    CHECK(throws_with(p, "tau must be in (0,1]"));
    p = baseline();
    p.tau = 1.0000001;
    CHECK(throws_with(p, "tau"));
    p = baseline();
    p.beta = 1.0;
    CHECK(throws_with(p, "beta must be in [0,1)"));
    p = baseline();
    p.alpha = 0.0;
    CHECK(throws_with(p, "alpha"));
    p = baseline();
    p.alpha = 1.0;
    CHECK(throws_with(p, "alpha"));
    p = baseline();
    p.mu = 1.0;
    CHECK(throws_with(p, "mu"));
    p = baseline();
    p.z = 0.0;
    CHECK(throws_with(p, "z"));
    p = baseline();
    p.phi = -0.1;
    CHECK(throws_with(p, "phi"));
    p = baseline();
    p.rho = 0.0;
    CHECK(throws_with(p, "rho"));
    p = baseline();
    p.xi = std::nan("");
    CHECK(throws_with(p, "xi must be finite"));
    p = baseline();
    p.a_tfp = std::numeric_limits<double>::infinity();
    CHECK(throws_with(p, "a_tfp"));
}

TEST_CASE("boundary values of the closed ends are legal") {
    ModelParams p = baseline();
    p.tau = 1.0;
    CHECK_NOTHROW(validate(p));
    p = baseline();
    p.beta = 0.0;
    CHECK_NOTHROW(validate(p));
    p = baseline();
    p.phi = 0.0;  // health feedback off
    CHECK_NOTHROW(validate(p));
    p = baseline();
    p.epsilon = 0.0;
    CHECK_NOTHROW(validate(p));
}

TEST_CASE("derive: savings propensity") {
    ModelParams p = baseline();
    p.rho = 1.0;
    CHECK(derive(p).delta == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    p.rho = 2.0;
    CHECK(derive(p).delta == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("derive: composite output scale collapses when epsilon = 0") {
    // With epsilon = 0 the health terms drop out:
    // Phi = A^{1/(1-alpha)} delta^{alpha/(1-alpha)} = 1 * 0.25 for these values.
    ModelParams p = baseline();
    p.epsilon = 0.0;
    const DerivedParams d = derive(p);
    CHECK(d.phi_gamma_eps == 0.0);
    CHECK(d.phi_big == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("validate is idempotent and derive ignores beta") {
    std::mt19937 rng(91);
    for (int i = 0; i < 200; ++i) {
        const ModelParams p = testutil::draw_params(rng);
        const ModelParams q = validate(validate(p));
        CHECK(std::memcmp(&p, &q, sizeof p) == 0);

        const DerivedParams d = derive(p);
        CHECK(d.delta > 0.0);
        CHECK(d.delta < 0.5);
        CHECK(std::isfinite(d.phi_big));
        CHECK(d.phi_big > 0.0);

        ModelParams r = p;
        r.beta = 0.9 * p.beta;
        CHECK(derive(r).delta == d.delta);
        CHECK(derive(r).phi_big == d.phi_big);  // beta enters nothing in Phi
    }
}
