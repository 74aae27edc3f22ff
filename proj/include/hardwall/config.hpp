#pragma once

// Run configuration and its flat text format. One "section.key = value" per
// line, '#' comments, no section headers; every key has a default, so an
// empty file is a valid config. Unknown and duplicate keys are hard errors
// with line numbers: a silently ignored typo in a physics parameter is far
// worse than a rejected file.
//
// Keys and defaults:
//   potential.model    cornell | global        (cornell)
//   potential.A        leading strength        (0.5)   cornell: Coulomb; global: sqrt term
//   potential.B        second strength         (2.0)   cornell: linear;  global: Coulomb
//   potential.C        constant offset         (0.8)   global only
//   trial.b            1 | 2                   (1)
//   run.z              comma list, positive    (1,2,3,4,5)
//   run.mu             reduced mass, GeV       (1.0)
//   run.mode           normalized | paper | both   (normalized)
//   solver.a_min / a_max / scan_points / tolerance_a / max_iterations
//   quadrature.abs_tol / rel_tol / max_subdivisions / rule_order
//   exact.n_interior / richardson / eigen_tol
//   density.samples    per-curve sample count  (1000)
//   output.dir         output directory        (.)
//   output.format      csv | json | both       (csv)
//
// "paper" selects the unnormalized energy convention; see expectation.hpp.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardwall/exact.hpp"
#include "hardwall/expectation.hpp"
#include "hardwall/potential.hpp"
#include "hardwall/varsolve.hpp"

namespace hardwall {

enum class ModeSelection { normalized, paper, both };
enum class OutputFormat { csv, json, both };

struct RunConfig {
    PotentialModel model = CornellPotential{0.5, 2.0};
    double trial_b = 1.0;
    std::vector<double> z_values = {1.0, 2.0, 3.0, 4.0, 5.0};
    double mu = 1.0;
    ModeSelection mode = ModeSelection::normalized;
    SolveOptions solver{};  // carries the quadrature config
    ExactConfig exact{};
    std::size_t density_samples = 1000;
    std::string output_dir = ".";
    OutputFormat format = OutputFormat::csv;
};

class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, const std::string& what)
        : std::runtime_error("config line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

inline const std::vector<ExpectationMode>& expectation_modes(ModeSelection sel) {
    static const std::vector<ExpectationMode> n = {ExpectationMode::normalized};
    static const std::vector<ExpectationMode> p = {ExpectationMode::unnormalized};
    static const std::vector<ExpectationMode> b = {ExpectationMode::normalized,
                                                   ExpectationMode::unnormalized};
    switch (sel) {
        case ModeSelection::normalized: return n;
        case ModeSelection::paper: return p;
        default: return b;
    }
}

inline void validate(const RunConfig& cfg) {
    validate(cfg.model);
    if (cfg.trial_b != 1.0 && cfg.trial_b != 2.0)
        throw std::invalid_argument("trial.b must be 1 or 2");
    if (cfg.z_values.empty())
        throw std::invalid_argument("run.z must list at least one cutoff");
    for (double z : cfg.z_values)
        if (!(z > 0.0) || !std::isfinite(z))
            throw std::invalid_argument("run.z entries must be positive and finite");
    if (!(cfg.mu > 0.0) || !std::isfinite(cfg.mu))
        throw std::invalid_argument("run.mu must be positive");
    validate(cfg.solver);
    validate(cfg.exact);
    if (cfg.density_samples < 2)
        throw std::invalid_argument("density.samples must be at least 2");
    if (cfg.output_dir.empty())
        throw std::invalid_argument("output.dir must not be empty");
}

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline double parse_number(const std::string& v, int line, const std::string& key) {
    const char* begin = v.c_str();
    char* end = nullptr;
    const double x = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw ConfigError(line, key + ": not a number: '" + v + "'");
    return x;
}

inline std::size_t parse_count(const std::string& v, int line, const std::string& key) {
    const double x = parse_number(v, line, key);
    if (!(x >= 0.0) || x != static_cast<double>(static_cast<std::size_t>(x)))
        throw ConfigError(line, key + ": not a whole number: '" + v + "'");
    return static_cast<std::size_t>(x);
}

inline bool parse_flag(const std::string& v, int line, const std::string& key) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ConfigError(line, key + ": expected true or false, got '" + v + "'");
}

inline std::vector<double> parse_list(const std::string& v, int line, const std::string& key) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(v);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw ConfigError(line, key + ": empty list entry");
        out.push_back(parse_number(item, line, key));
    }
    if (out.empty())
        throw ConfigError(line, key + ": empty list");
    return out;
}

}  // namespace detail

// Parses config text. The file is read in two passes (collect, then
// interpret) so key order never matters; in particular potential.C may
// precede potential.model = global.
inline RunConfig parse_config(const std::string& text) {
    struct Entry {
        std::string value;
        int line;
    };
    std::map<std::string, Entry> seen;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = detail::trim(raw);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(lineno, "expected 'section.key = value'");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty() || key.find('.') == std::string::npos)
            throw ConfigError(lineno, "key must look like 'section.key'");
        if (value.empty())
            throw ConfigError(lineno, key + ": empty value");
        const auto [it, inserted] = seen.emplace(key, Entry{value, lineno});
        if (!inserted)
            throw ConfigError(lineno, key + ": duplicate key (first on line " +
                                          std::to_string(it->second.line) + ")");
    }

    RunConfig cfg;

    // potential family first; strengths are interpreted against it
    std::string model_name = "cornell";
    if (auto it = seen.find("potential.model"); it != seen.end()) {
        model_name = it->second.value;
        if (model_name != "cornell" && model_name != "global")
            throw ConfigError(it->second.line,
                              "potential.model: expected cornell or global, got '" +
                                  model_name + "'");
    }
    double A = 0.5, B = 2.0, C = 0.8;
    if (auto it = seen.find("potential.A"); it != seen.end())
        A = detail::parse_number(it->second.value, it->second.line, "potential.A");
    if (auto it = seen.find("potential.B"); it != seen.end())
        B = detail::parse_number(it->second.value, it->second.line, "potential.B");
    if (auto it = seen.find("potential.C"); it != seen.end()) {
        if (model_name != "global")
            throw ConfigError(it->second.line,
                              "potential.C applies only to the global model");
        C = detail::parse_number(it->second.value, it->second.line, "potential.C");
    }
    if (model_name == "cornell")
        cfg.model = CornellPotential{A, B};
    else
        cfg.model = GlobalPotential{A, B, C};

    auto number = [&](const char* key, double& slot) {
        if (auto it = seen.find(key); it != seen.end())
            slot = detail::parse_number(it->second.value, it->second.line, key);
    };
    auto count = [&](const char* key, auto& slot) {
        if (auto it = seen.find(key); it != seen.end())
            slot = detail::parse_count(it->second.value, it->second.line, key);
    };

    if (auto it = seen.find("trial.b"); it != seen.end()) {
        cfg.trial_b = detail::parse_number(it->second.value, it->second.line, "trial.b");
        if (cfg.trial_b != 1.0 && cfg.trial_b != 2.0)
            throw ConfigError(it->second.line, "trial.b must be 1 or 2");
    }
    if (auto it = seen.find("run.z"); it != seen.end()) {
        cfg.z_values = detail::parse_list(it->second.value, it->second.line, "run.z");
        for (double z : cfg.z_values)
            if (!(z > 0.0) || !std::isfinite(z))
                throw ConfigError(it->second.line, "run.z entries must be positive");
    }
    if (auto it = seen.find("run.mu"); it != seen.end()) {
        cfg.mu = detail::parse_number(it->second.value, it->second.line, "run.mu");
        if (!(cfg.mu > 0.0) || !std::isfinite(cfg.mu))
            throw ConfigError(it->second.line, "run.mu must be positive");
    }
    if (auto it = seen.find("run.mode"); it != seen.end()) {
        const std::string& v = it->second.value;
        if (v == "normalized")
            cfg.mode = ModeSelection::normalized;
        else if (v == "paper")
            cfg.mode = ModeSelection::paper;
        else if (v == "both")
            cfg.mode = ModeSelection::both;
        else
            throw ConfigError(it->second.line,
                              "run.mode: expected normalized, paper, or both");
    }

    number("solver.a_min", cfg.solver.a_min);
    number("solver.a_max", cfg.solver.a_max);
    count("solver.scan_points", cfg.solver.scan_points);
    number("solver.tolerance_a", cfg.solver.tolerance_a);
    count("solver.max_iterations", cfg.solver.max_iterations);
    number("quadrature.abs_tol", cfg.solver.quadrature.abs_tol);
    number("quadrature.rel_tol", cfg.solver.quadrature.rel_tol);
    if (auto it = seen.find("quadrature.max_subdivisions"); it != seen.end())
        cfg.solver.quadrature.max_subdivisions = static_cast<int>(detail::parse_count(
            it->second.value, it->second.line, "quadrature.max_subdivisions"));
    if (auto it = seen.find("quadrature.rule_order"); it != seen.end())
        cfg.solver.quadrature.rule_order = static_cast<int>(detail::parse_count(
            it->second.value, it->second.line, "quadrature.rule_order"));
    count("exact.n_interior", cfg.exact.n_interior);
    if (auto it = seen.find("exact.richardson"); it != seen.end())
        cfg.exact.richardson =
            detail::parse_flag(it->second.value, it->second.line, "exact.richardson");
    number("exact.eigen_tol", cfg.exact.eigen_tol);
    count("density.samples", cfg.density_samples);
    if (auto it = seen.find("output.dir"); it != seen.end())
        cfg.output_dir = it->second.value;
    if (auto it = seen.find("output.format"); it != seen.end()) {
        const std::string& v = it->second.value;
        if (v == "csv")
            cfg.format = OutputFormat::csv;
        else if (v == "json")
            cfg.format = OutputFormat::json;
        else if (v == "both")
            cfg.format = OutputFormat::both;
        else
            throw ConfigError(it->second.line, "output.format: expected csv, json, or both");
    }

    static const char* known[] = {
        "potential.model", "potential.A", "potential.B", "potential.C",
        "trial.b", "run.z", "run.mu", "run.mode",
        "solver.a_min", "solver.a_max", "solver.scan_points", "solver.tolerance_a",
        "solver.max_iterations",
        "quadrature.abs_tol", "quadrature.rel_tol", "quadrature.max_subdivisions",
        "quadrature.rule_order",
        "exact.n_interior", "exact.richardson", "exact.eigen_tol",
        "density.samples", "output.dir", "output.format"};
    for (const auto& [key, entry] : seen) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) {
                ok = true;
                break;
            }
        if (!ok) throw ConfigError(entry.line, "unknown key '" + key + "'");
    }

    validate(cfg);
    return cfg;
}

inline RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace hardwall
