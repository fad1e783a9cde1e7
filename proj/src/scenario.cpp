#include "olgtax/scenario.hpp"

#include "olgtax/render.hpp"
#include "olgtax/steady_state.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>

namespace olgtax {

namespace {

const char* const kParamKeys[] = {"alpha", "tau",     "beta", "gamma", "mu",
                                  "z",     "theta",   "eta",  "xi",    "phi",
                                  "epsilon", "rho",   "a_tfp"};

double ModelParams::* param_member(const std::string& key) {
    if (key == "alpha") return &ModelParams::alpha;
    if (key == "tau") return &ModelParams::tau;
    if (key == "beta") return &ModelParams::beta;
    if (key == "gamma") return &ModelParams::gamma;
    if (key == "mu") return &ModelParams::mu;
    if (key == "z") return &ModelParams::z;
    if (key == "theta") return &ModelParams::theta;
    if (key == "eta") return &ModelParams::eta;
    if (key == "xi") return &ModelParams::xi;
    if (key == "phi") return &ModelParams::phi;
    if (key == "epsilon") return &ModelParams::epsilon;
    if (key == "rho") return &ModelParams::rho;
    if (key == "a_tfp") return &ModelParams::a_tfp;
    return nullptr;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& key, const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw ScenarioError("scenario: bad numeric value for " + key + ": '" + text + "'");
    return v;
}

}  // namespace

Scenario parse_scenario(std::istream& in) {
    std::map<std::string, double> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ScenarioError("scenario: line " + std::to_string(lineno) +
                                " is not 'name = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const bool known = param_member(key) != nullptr || key == "k0" || key == "p0" ||
                           key == "max_periods" || key == "tol";
        if (!known) throw ScenarioError("scenario: unknown key '" + key + "'");
        if (seen.count(key)) throw ScenarioError("scenario: duplicate key '" + key + "'");
        seen[key] = parse_number(key, value);
    }

    Scenario sc;
    for (const char* key : kParamKeys) {
        const auto it = seen.find(key);
        if (it == seen.end())
            throw ScenarioError(std::string("scenario: missing key '") + key + "'");
        sc.params.*param_member(key) = it->second;
    }
    validate(sc.params);

    sc.k0 = seen.count("k0") ? seen["k0"] : 0.01;
    sc.p0 = seen.count("p0") ? seen["p0"] : solve_steady_state(sc.params).p_star;
    if (seen.count("max_periods")) {
        const double mp = seen["max_periods"];
        if (!(mp >= 0.0) || mp != std::floor(mp) || mp > 1e9)
            throw ScenarioError("scenario: max_periods must be a nonnegative integer");
        sc.sim.max_periods = static_cast<int>(mp);
    }
    if (seen.count("tol")) sc.sim.tol = seen["tol"];

    if (!(std::isfinite(sc.k0) && sc.k0 > 0.0)) throw ScenarioError("scenario: k0 must be finite and > 0");
    if (!(std::isfinite(sc.p0) && sc.p0 > 0.0)) throw ScenarioError("scenario: p0 must be finite and > 0");
    if (!(std::isfinite(sc.sim.tol) && sc.sim.tol > 0.0))
        throw ScenarioError("scenario: tol must be finite and > 0");
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("scenario: cannot open '" + path + "'");
    return parse_scenario(in);
}

std::string render_scenario(const Scenario& sc) {
    std::ostringstream out;
    for (const char* key : kParamKeys)
        out << key << " = " << fmt17(sc.params.*param_member(key)) << "\n";
    out << "k0 = " << fmt17(sc.k0) << "\n";
    out << "p0 = " << fmt17(sc.p0) << "\n";
    out << "max_periods = " << sc.sim.max_periods << "\n";
    out << "tol = " << fmt17(sc.sim.tol) << "\n";
    return out.str();
}

}  // namespace olgtax
