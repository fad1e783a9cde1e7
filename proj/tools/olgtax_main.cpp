// Command-line front end: validate / simulate / steady / thresholds / sweep /
// optimize / regimes over a scenario file. Output is deterministic; identical
// scenarios give byte-identical stdout and files.

#include "CLI11.hpp"

#include "olgtax/dynamics.hpp"
#include "olgtax/optimize.hpp"
#include "olgtax/policy.hpp"
#include "olgtax/render.hpp"
#include "olgtax/scenario.hpp"
#include "olgtax/steady_state.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace olgtax;

struct GridSpec {
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    char trailing;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &g.from, &g.to, &g.steps, &trailing) != 3)
        throw ScenarioError("grid must be from:to:steps, got '" + text + "'");
    if (g.steps < 2) throw ScenarioError("grid needs steps >= 2");
    if (!(g.from < g.to)) throw ScenarioError("grid needs from < to");
    return g;
}

std::vector<double> grid_values(const GridSpec& g) {
    std::vector<double> v(g.steps);
    for (int i = 0; i < g.steps; ++i)
        v[i] = g.from + (g.to - g.from) * i / (g.steps - 1);
    return v;
}

double ModelParams::* sweep_member(const std::string& name) {
    if (name == "alpha") return &ModelParams::alpha;
    if (name == "tau") return &ModelParams::tau;
    if (name == "beta") return &ModelParams::beta;
    if (name == "gamma") return &ModelParams::gamma;
    if (name == "mu") return &ModelParams::mu;
    if (name == "z") return &ModelParams::z;
    if (name == "theta") return &ModelParams::theta;
    if (name == "eta") return &ModelParams::eta;
    if (name == "xi") return &ModelParams::xi;
    if (name == "phi") return &ModelParams::phi;
    if (name == "epsilon") return &ModelParams::epsilon;
    if (name == "rho") return &ModelParams::rho;
    if (name == "a_tfp") return &ModelParams::a_tfp;
    throw ScenarioError("unknown sweep parameter '" + name + "'");
}

// Buffered write: no partial files are left behind on failure.
void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (out) out << content;
    if (!out) {
        std::remove(path.c_str());
        throw ScenarioError("cannot write '" + path + "'");
    }
}

void warn_low_pollution(double p_min) {
    if (p_min <= 1.0)
        std::cerr << "warning: pollution stock reaches " << fmt17(p_min)
                  << " <= 1; the health relation assumes P > 1\n";
}

std::string steady_json(const SteadyState& s) {
    return "{\"p_star\":" + json_number(s.p_star) +
           ",\"h_star\":" + json_number(s.h_star) +
           ",\"k_star\":" + json_number(s.k_star) +
           ",\"y_star\":" + json_number(s.y_star) +
           ",\"w_star\":" + json_number(s.w_star) +
           ",\"u_star\":" + json_number(s.u_star) +
           ",\"c1_star\":" + json_number(s.c1_star) +
           ",\"c2_star\":" + json_number(s.c2_star) + "}";
}

std::string scenario_json(const Scenario& sc) {
    const ModelParams& p = sc.params;
    return "{\"alpha\":" + json_number(p.alpha) + ",\"tau\":" + json_number(p.tau) +
           ",\"beta\":" + json_number(p.beta) + ",\"gamma\":" + json_number(p.gamma) +
           ",\"mu\":" + json_number(p.mu) + ",\"z\":" + json_number(p.z) +
           ",\"theta\":" + json_number(p.theta) + ",\"eta\":" + json_number(p.eta) +
           ",\"xi\":" + json_number(p.xi) + ",\"phi\":" + json_number(p.phi) +
           ",\"epsilon\":" + json_number(p.epsilon) + ",\"rho\":" + json_number(p.rho) +
           ",\"a_tfp\":" + json_number(p.a_tfp) + ",\"k0\":" + json_number(sc.k0) +
           ",\"p0\":" + json_number(sc.p0) +
           ",\"max_periods\":" + std::to_string(sc.sim.max_periods) +
           ",\"tol\":" + json_number(sc.sim.tol) + "}";
}

int run(int argc, char** argv) {
    CLI::App app{"olgtax: OLG economy with a pollution-health-productivity feedback and "
                 "environmental-tax recycling"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_path;
    std::string grid_text;
    std::string param_name;
    std::string outputs_text = "y_star,u_star,w_star,h_star,p_star,dy_dbeta,du_dbeta";
    bool as_json = false;
    double tol_override = -1.0;
    int max_periods_override = -1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--scenario", scenario_path, "scenario file")->required();
        cmd->add_flag("--json", as_json, "JSON to stdout");
    };

    CLI::App* cmd_validate =
        app.add_subcommand("validate", "check a scenario and echo it in canonical form");
    add_common(cmd_validate);

    CLI::App* cmd_simulate = app.add_subcommand("simulate", "run the transition to convergence");
    add_common(cmd_simulate);
    cmd_simulate->add_option("--out", out_path, "trajectory CSV")->required();
    cmd_simulate->add_option("--tol", tol_override, "convergence tolerance override");
    cmd_simulate->add_option("--max-periods", max_periods_override, "period cap override");

    CLI::App* cmd_steady = app.add_subcommand("steady", "closed-form steady state as JSON");
    add_common(cmd_steady);

    CLI::App* cmd_thresholds =
        app.add_subcommand("thresholds", "recycling-share cutoffs, maximizers and regime");
    add_common(cmd_thresholds);

    CLI::App* cmd_sweep = app.add_subcommand("sweep", "steady-state outputs over a parameter grid");
    add_common(cmd_sweep);
    cmd_sweep->add_option("--param", param_name, "parameter to sweep")->required();
    cmd_sweep->add_option("--grid", grid_text, "from:to:steps")->required();
    cmd_sweep->add_option("--out", out_path, "output CSV")->required();
    cmd_sweep->add_option("--outputs", outputs_text, "comma-separated output columns");

    CLI::App* cmd_optimize =
        app.add_subcommand("optimize", "numerical maximizers audited against the closed forms");
    add_common(cmd_optimize);

    CLI::App* cmd_regimes =
        app.add_subcommand("regimes", "regime boundaries over a tau grid vs analytic cutoffs");
    add_common(cmd_regimes);
    cmd_regimes->add_option("--grid", grid_text, "tau grid, from:to:steps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    const Scenario sc = load_scenario(scenario_path);
    const ModelParams& p = sc.params;

    if (cmd_validate->parsed()) {
        if (as_json)
            std::cout << scenario_json(sc) << "\n";
        else
            std::cout << render_scenario(sc);
        return 0;
    }

    if (cmd_simulate->parsed()) {
        const int max_periods =
            max_periods_override >= 0 ? max_periods_override : sc.sim.max_periods;
        const double tol = tol_override > 0.0 ? tol_override : sc.sim.tol;
        const Trajectory traj = simulate(p, sc.k0, sc.p0, max_periods, tol);
        std::ostringstream csv;
        write_trajectory_csv(csv, traj);
        write_file(out_path, csv.str());
        double p_min = traj.states.front().pollution;
        for (const EconState& s : traj.states) p_min = std::min(p_min, s.pollution);
        warn_low_pollution(p_min);
        const int periods = static_cast<int>(traj.states.size()) - 1;
        if (as_json)
            std::cout << "{\"converged\":" << (traj.converged ? "true" : "false")
                      << ",\"periods\":" << periods
                      << ",\"residual\":" << json_number(traj.residual) << "}\n";
        else
            std::cout << "converged=" << (traj.converged ? "true" : "false")
                      << " periods=" << periods << " residual=" << fmt17(traj.residual)
                      << "\n";
        return 0;
    }

    if (cmd_steady->parsed()) {
        const SteadyState s = solve_steady_state(p);
        warn_low_pollution(s.p_star);
        std::cout << steady_json(s) << "\n";
        return 0;
    }

    if (cmd_thresholds->parsed()) {
        std::cout << to_json(classify(p)) << "\n";
        return 0;
    }

    if (cmd_sweep->parsed()) {
        double ModelParams::* member = sweep_member(param_name);
        const GridSpec grid = parse_grid(grid_text);

        std::vector<std::string> outputs;
        std::stringstream names(outputs_text);
        std::string name;
        while (std::getline(names, name, ',')) {
            if (name != "y_star" && name != "u_star" && name != "w_star" && name != "h_star" &&
                name != "p_star" && name != "dy_dbeta" && name != "du_dbeta")
                throw ScenarioError("unknown sweep output '" + name + "'");
            outputs.push_back(name);
        }
        if (outputs.empty()) throw ScenarioError("sweep needs at least one output column");

        std::ostringstream csv;
        csv << "value";
        for (const std::string& o : outputs) csv << ',' << o;
        csv << '\n';
        for (const double v : grid_values(grid)) {
            ModelParams q = p;
            q.*member = v;
            try {
                validate(q);
            } catch (const ParamError& e) {
                throw ScenarioError("sweep grid leaves the valid range: " + std::string(e.what()));
            }
            const SteadyState s = solve_steady_state(q);
            csv << fmt17(v);
            for (const std::string& o : outputs) {
                double val = 0.0;
                if (o == "y_star") val = s.y_star;
                else if (o == "u_star") val = s.u_star;
                else if (o == "w_star") val = s.w_star;
                else if (o == "h_star") val = s.h_star;
                else if (o == "p_star") val = s.p_star;
                else if (o == "dy_dbeta") val = dy_dbeta(q, q.beta);
                else val = du_dbeta(q, q.beta);
                csv << ',' << fmt17(val);
            }
            csv << '\n';
        }
        write_file(out_path, csv.str());
        return 0;
    }

    if (cmd_optimize->parsed()) {
        auto y_of = [&](double b) {
            ModelParams q = p;
            q.beta = b;
            return solve_steady_state(q).y_star;
        };
        auto u_of = [&](double b) {
            ModelParams q = p;
            q.beta = b;
            return welfare(q);
        };
        if (p.tau >= 1.0)
            throw NumericError("optimize: welfare objective undefined at tau = 1");
        const ScalarMaxResult ry = maximize_on_unit_interval(y_of);
        const ScalarMaxResult ru = maximize_on_unit_interval(u_of);
        const double bh = beta_hat(p);
        const double bhu = beta_hat_u(p);
        const double max_abs_gap =
            std::max(std::abs(ry.arg_max - bh), std::abs(ru.arg_max - bhu));
        std::cout << "{\"argmax_y\":" << json_number(ry.arg_max)
                  << ",\"beta_hat\":" << json_number(bh)
                  << ",\"argmax_u\":" << json_number(ru.arg_max)
                  << ",\"beta_hat_u\":" << json_number(bhu)
                  << ",\"max_abs_gap\":" << json_number(max_abs_gap) << "}\n";
        return 0;
    }

    // regimes
    const GridSpec grid =
        grid_text.empty() ? GridSpec{0.005, 0.995, 199} : parse_grid(grid_text);
    const PolicyReport base = classify(p);
    double u_lo = 0.0, u_hi = 0.0, y_lo = 0.0, y_hi = 0.0;
    bool found_u = false, found_y = false;
    Regime prev = Regime::I;
    bool have_prev = false;
    double prev_tau = 0.0;
    for (const double v : grid_values(grid)) {
        ModelParams q = p;
        q.tau = v;
        try {
            validate(q);
        } catch (const ParamError& e) {
            throw ScenarioError("regimes grid leaves the valid range: " + std::string(e.what()));
        }
        const Regime r = classify(q).regime;
        if (have_prev && r != prev) {
            if (prev == Regime::I) {
                u_lo = prev_tau;
                u_hi = v;
                found_u = true;
            }
            if (r == Regime::III) {
                y_lo = prev_tau;
                y_hi = v;
                found_y = true;
            }
        }
        prev = r;
        prev_tau = v;
        have_prev = true;
    }
    if (as_json) {
        std::cout << "{\"tau_cutoff_u\":" << json_number(base.tau_cutoff_u)
                  << ",\"tau_cutoff_y\":" << json_number(base.tau_cutoff_y);
        if (found_u)
            std::cout << ",\"boundary_u_low\":" << json_number(u_lo)
                      << ",\"boundary_u_high\":" << json_number(u_hi);
        else
            std::cout << ",\"boundary_u_low\":null,\"boundary_u_high\":null";
        if (found_y)
            std::cout << ",\"boundary_y_low\":" << json_number(y_lo)
                      << ",\"boundary_y_high\":" << json_number(y_hi);
        else
            std::cout << ",\"boundary_y_low\":null,\"boundary_y_high\":null";
        std::cout << "}\n";
    } else {
        std::cout << "tau_cutoff_u = " << fmt17(base.tau_cutoff_u) << "\n";
        std::cout << "tau_cutoff_y = " << fmt17(base.tau_cutoff_y) << "\n";
        if (found_u)
            std::cout << "regime I/II boundary between tau = " << fmt17(u_lo) << " and "
                      << fmt17(u_hi) << "\n";
        else
            std::cout << "regime I/II boundary not inside grid\n";
        if (found_y)
            std::cout << "regime II/III boundary between tau = " << fmt17(y_lo) << " and "
                      << fmt17(y_hi) << "\n";
        else
            std::cout << "regime II/III boundary not inside grid\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const olgtax::NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
