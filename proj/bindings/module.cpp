#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "olgtax/dynamics.hpp"
#include "olgtax/optimize.hpp"
#include "olgtax/policy.hpp"
#include "olgtax/render.hpp"
#include "olgtax/scenario.hpp"
#include "olgtax/steady_state.hpp"

#include <sstream>

namespace py = pybind11;
using namespace olgtax;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two-period growth model with a pollution-health feedback: "
              "steady states, transition paths, recycling-policy analysis.";

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](double alpha, double tau, double beta, double gamma,
                         double mu, double z, double theta, double eta, double xi,
                         double phi, double epsilon, double rho, double a_tfp) {
                 return ModelParams{alpha, tau,     beta, gamma, mu,  z,  theta,
                                    eta,   xi,      phi,  epsilon, rho, a_tfp};
             }),
             py::arg("alpha"), py::arg("tau"), py::arg("beta"), py::arg("gamma"),
             py::arg("mu"), py::arg("z"), py::arg("theta"), py::arg("eta"),
             py::arg("xi"), py::arg("phi"), py::arg("epsilon"), py::arg("rho"),
             py::arg("a_tfp"))
        .def_readwrite("alpha", &ModelParams::alpha)
        .def_readwrite("tau", &ModelParams::tau)
        .def_readwrite("beta", &ModelParams::beta)
        .def_readwrite("gamma", &ModelParams::gamma)
        .def_readwrite("mu", &ModelParams::mu)
        .def_readwrite("z", &ModelParams::z)
        .def_readwrite("theta", &ModelParams::theta)
        .def_readwrite("eta", &ModelParams::eta)
        .def_readwrite("xi", &ModelParams::xi)
        .def_readwrite("phi", &ModelParams::phi)
        .def_readwrite("epsilon", &ModelParams::epsilon)
        .def_readwrite("rho", &ModelParams::rho)
        .def_readwrite("a_tfp", &ModelParams::a_tfp)
        .def("__repr__", [](const ModelParams& p) {
            std::ostringstream o;
            o << "ModelParams(alpha=" << fmt17(p.alpha) << ", tau=" << fmt17(p.tau)
              << ", beta=" << fmt17(p.beta) << ", gamma=" << fmt17(p.gamma)
              << ", mu=" << fmt17(p.mu) << ", z=" << fmt17(p.z)
              << ", theta=" << fmt17(p.theta) << ", eta=" << fmt17(p.eta)
              << ", xi=" << fmt17(p.xi) << ", phi=" << fmt17(p.phi)
              << ", epsilon=" << fmt17(p.epsilon) << ", rho=" << fmt17(p.rho)
              << ", a_tfp=" << fmt17(p.a_tfp) << ")";
            return o.str();
        });

    py::class_<DerivedParams>(m, "DerivedParams")
        .def_readonly("delta", &DerivedParams::delta)
        .def_readonly("phi_gamma_eps", &DerivedParams::phi_gamma_eps)
        .def_readonly("phi_big", &DerivedParams::phi_big);

    py::class_<SteadyState>(m, "SteadyState")
        .def_readonly("p_star", &SteadyState::p_star)
        .def_readonly("h_star", &SteadyState::h_star)
        .def_readonly("k_star", &SteadyState::k_star)
        .def_readonly("y_star", &SteadyState::y_star)
        .def_readonly("w_star", &SteadyState::w_star)
        .def_readonly("u_star", &SteadyState::u_star)
        .def_readonly("c1_star", &SteadyState::c1_star)
        .def_readonly("c2_star", &SteadyState::c2_star)
        .def("__repr__", [](const SteadyState& s) {
            std::ostringstream o;
            o << "SteadyState(p_star=" << fmt17(s.p_star) << ", h_star=" << fmt17(s.h_star)
              << ", k_star=" << fmt17(s.k_star) << ", y_star=" << fmt17(s.y_star)
              << ", w_star=" << fmt17(s.w_star) << ", u_star=" << fmt17(s.u_star)
              << ", c1_star=" << fmt17(s.c1_star) << ", c2_star=" << fmt17(s.c2_star)
              << ")";
            return o.str();
        });

    py::class_<EconState>(m, "EconState")
        .def_readonly("t", &EconState::t)
        .def_readonly("k", &EconState::k)
        .def_readonly("pollution", &EconState::pollution)
        .def_readonly("health", &EconState::health)
        .def_readonly("y", &EconState::y)
        .def_readonly("wage", &EconState::wage)
        .def_readonly("interest", &EconState::interest)
        .def_readonly("c_young", &EconState::c_young)
        .def_readonly("savings", &EconState::savings);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("states", &Trajectory::states)
        .def_readonly("converged", &Trajectory::converged)
        .def_readonly("residual", &Trajectory::residual);

    py::enum_<Regime>(m, "Regime")
        .value("I", Regime::I)
        .value("II", Regime::II)
        .value("III", Regime::III);

    py::class_<PolicyReport>(m, "PolicyReport")
        .def_readonly("tau_cutoff_y", &PolicyReport::tau_cutoff_y)
        .def_readonly("tau_cutoff_u", &PolicyReport::tau_cutoff_u)
        .def_readonly("beta_hat", &PolicyReport::beta_hat)
        .def_readonly("beta_hat_u", &PolicyReport::beta_hat_u)
        .def_readonly("regime", &PolicyReport::regime)
        .def_readonly("gap", &PolicyReport::gap)
        .def_readonly("no_interior_maximizer", &PolicyReport::no_interior_maximizer)
        .def("__repr__", [](const PolicyReport& r) { return to_json(r); });

    py::class_<ComparativeStatics>(m, "ComparativeStatics")
        .def_readonly("d_alpha", &ComparativeStatics::d_alpha)
        .def_readonly("d_tau", &ComparativeStatics::d_tau)
        .def_readonly("d_phi", &ComparativeStatics::d_phi)
        .def_readonly("d_epsilon", &ComparativeStatics::d_epsilon)
        .def_readonly("d_gamma", &ComparativeStatics::d_gamma);

    py::class_<ScalarMaxResult>(m, "ScalarMaxResult")
        .def_readonly("arg_max", &ScalarMaxResult::arg_max)
        .def_readonly("max_value", &ScalarMaxResult::max_value)
        .def_readonly("evaluations", &ScalarMaxResult::evaluations)
        .def_readonly("bracket_width", &ScalarMaxResult::bracket_width);

    py::class_<SimSettings>(m, "SimSettings")
        .def(py::init<>())
        .def_readwrite("max_periods", &SimSettings::max_periods)
        .def_readwrite("tol", &SimSettings::tol);

    py::class_<Scenario>(m, "Scenario")
        .def_readwrite("params", &Scenario::params)
        .def_readwrite("k0", &Scenario::k0)
        .def_readwrite("p0", &Scenario::p0)
        .def_readwrite("sim", &Scenario::sim);

    m.def("validate", &validate, py::arg("params"),
          "Range-check every parameter; returns the params unchanged.");
    m.def("derive", &derive, py::arg("params"));
    m.def("solve_steady_state", &solve_steady_state, py::arg("params"));
    m.def("welfare", &welfare, py::arg("params"),
          "Closed-form steady-state lifetime utility; requires tau < 1.");
    m.def("initial_state", &initial_state, py::arg("params"), py::arg("k0"),
          py::arg("p0"));
    m.def("step", &step, py::arg("params"), py::arg("state"));
    m.def("simulate", &simulate, py::arg("params"), py::arg("k0"), py::arg("p0"),
          py::arg("max_periods") = 10000, py::arg("tol") = 1e-12);
    m.def("cohort_welfare", &cohort_welfare, py::arg("params"), py::arg("s_t"),
          py::arg("s_t1"));
    m.def("trajectory_csv", [](const Trajectory& traj) {
        std::ostringstream out;
        write_trajectory_csv(out, traj);
        return out.str();
    });

    m.def("dy_dbeta", &dy_dbeta, py::arg("params"), py::arg("beta"));
    m.def("du_dbeta", &du_dbeta, py::arg("params"), py::arg("beta"));
    m.def("tau_cutoff_y", &tau_cutoff_y, py::arg("params"));
    m.def("tau_cutoff_u", &tau_cutoff_u, py::arg("params"));
    m.def("beta_hat", &beta_hat, py::arg("params"));
    m.def("beta_hat_u", &beta_hat_u, py::arg("params"));
    m.def("classify", &classify, py::arg("params"));
    m.def("gap", &gap, py::arg("params"));
    m.def("comparative_statics", &comparative_statics, py::arg("params"),
          py::arg("bump") = 1e-5);
    m.def("regime_name", &regime_name, py::arg("regime"));
    m.def("policy_json", [](const PolicyReport& r) { return to_json(r); },
          py::arg("report"));

    m.def("maximize_on_unit_interval", &maximize_on_unit_interval,
          py::arg("objective"), py::arg("tol") = 1e-9);
    m.def("central_diff", &central_diff, py::arg("f"), py::arg("x"),
          py::arg("h") = 1e-6);

    m.def("parse_scenario",
          [](const std::string& text) {
              std::istringstream in(text);
              return parse_scenario(in);
          },
          py::arg("text"));
    m.def("load_scenario", &load_scenario, py::arg("path"));
    m.def("render_scenario", &render_scenario, py::arg("scenario"));
}
