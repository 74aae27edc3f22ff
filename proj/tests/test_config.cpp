#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <variant>

#include "hardwall/config.hpp"

using namespace hardwall;

namespace {

// Returns the reported line of the ConfigError thrown by parse_config, or -1
// if the text parses cleanly. Optionally captures the message.
int error_line(const std::string& text, std::string* msg = nullptr) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        if (msg) *msg = e.what();
        return e.line();
    }
    return -1;
}

bool contains(const std::string& msg, const std::string& needle) {
    return msg.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("empty and comment-only configs give the documented defaults") {
    for (const std::string& text : {std::string{}, std::string{"# nothing\n\n  \t\n"}}) {
        const RunConfig cfg = parse_config(text);
        const auto* c = std::get_if<CornellPotential>(&cfg.model);
        REQUIRE(c != nullptr);
        CHECK(c->coulomb_strength == 0.5);
        CHECK(c->linear_slope == 2.0);
        CHECK(cfg.trial_b == 1.0);
        CHECK(cfg.z_values == std::vector<double>{1.0, 2.0, 3.0, 4.0, 5.0});
        CHECK(cfg.mu == 1.0);
        CHECK(cfg.mode == ModeSelection::normalized);
        CHECK(cfg.solver.a_min == 1e-4);
        CHECK(cfg.solver.a_max == 50.0);
        CHECK(cfg.solver.scan_points == 200);
        CHECK(cfg.solver.tolerance_a == 1e-8);
        CHECK(cfg.solver.quadrature.abs_tol == 1e-12);
        CHECK(cfg.solver.quadrature.rel_tol == 1e-10);
        CHECK(cfg.solver.quadrature.max_subdivisions == 200);
        CHECK(cfg.solver.quadrature.rule_order == 15);
        CHECK(cfg.exact.n_interior == 4000);
        CHECK(cfg.exact.richardson);
        CHECK(cfg.exact.eigen_tol == 1e-12);
        CHECK(cfg.density_samples == 1000);
        CHECK(cfg.output_dir == ".");
        CHECK(cfg.format == OutputFormat::csv);
    }
}

TEST_CASE("every key parses and lands in the right slot") {
    const std::string text =
        "# exercise every key\n"
        "potential.model = global\n"
        "potential.A = 0.4\n"
        "potential.B = 1.5\n"
        "potential.C = 0.9\n"
        "trial.b = 2\n"
        "run.z = 0.5, 1, 2.5\n"
        "run.mu = 0.75\n"
        "run.mode = both\n"
        "solver.a_min = 1e-3\n"
        "solver.a_max = 20\n"
        "solver.scan_points = 50\n"
        "solver.tolerance_a = 1e-7\n"
        "solver.max_iterations = 80\n"
        "quadrature.abs_tol = 1e-11\n"
        "quadrature.rel_tol = 1e-9\n"
        "quadrature.max_subdivisions = 120\n"
        "quadrature.rule_order = 15\n"
        "exact.n_interior = 500\n"
        "exact.richardson = false\n"
        "exact.eigen_tol = 1e-11\n"
        "density.samples = 200\n"
        "output.dir = out\n"
        "output.format = both\n";
    const RunConfig cfg = parse_config(text);
    const auto* g = std::get_if<GlobalPotential>(&cfg.model);
    REQUIRE(g != nullptr);
    CHECK(g->sqrt_strength == 0.4);
    CHECK(g->coulomb_strength == 1.5);
    CHECK(g->offset == 0.9);
    CHECK(cfg.trial_b == 2.0);
    CHECK(cfg.z_values == std::vector<double>{0.5, 1.0, 2.5});
    CHECK(cfg.mu == 0.75);
    CHECK(cfg.mode == ModeSelection::both);
    CHECK(cfg.solver.a_min == 1e-3);
    CHECK(cfg.solver.a_max == 20.0);
    CHECK(cfg.solver.scan_points == 50);
    CHECK(cfg.solver.tolerance_a == 1e-7);
    CHECK(cfg.solver.max_iterations == 80);
    CHECK(cfg.solver.quadrature.abs_tol == 1e-11);
    CHECK(cfg.solver.quadrature.rel_tol == 1e-9);
    CHECK(cfg.solver.quadrature.max_subdivisions == 120);
    CHECK(cfg.exact.n_interior == 500);
    CHECK_FALSE(cfg.exact.richardson);
    CHECK(cfg.exact.eigen_tol == 1e-11);
    CHECK(cfg.density_samples == 200);
    CHECK(cfg.output_dir == "out");
    CHECK(cfg.format == OutputFormat::both);
}

TEST_CASE("whitespace, inline comments, and key order are immaterial") {
    const RunConfig cfg = parse_config(
        "\n  potential.C=0.25   # set before the model line\n"
        "\tpotential.model = global  # tab indent\n");
    const auto* g = std::get_if<GlobalPotential>(&cfg.model);
    REQUIRE(g != nullptr);
    CHECK(g->offset == 0.25);
    CHECK(g->sqrt_strength == 0.5);
    CHECK(g->coulomb_strength == 2.0);
}

TEST_CASE("parse errors carry the offending line number") {
    std::string msg;

    SECTION("unknown key") {
        CHECK(error_line("potential.model = cornell\nrun.zz = 1\n", &msg) == 2);
        CHECK(contains(msg, "unknown key 'run.zz'"));
    }
    SECTION("duplicate key cites the first occurrence") {
        CHECK(error_line("run.mu = 1\nrun.mu = 2\n", &msg) == 2);
        CHECK(contains(msg, "first on line 1"));
    }
    SECTION("shape errors") {
        CHECK(error_line("hello\n", &msg) == 1);
        CHECK(contains(msg, "section.key"));
        CHECK(error_line("mu = 1\n") == 1);
        CHECK(error_line("run.mu =\n", &msg) == 1);
        CHECK(contains(msg, "empty value"));
    }
    SECTION("value errors") {
        CHECK(error_line("\nrun.mu = fast\n", &msg) == 2);
        CHECK(contains(msg, "not a number"));
        CHECK(error_line("run.z = 1, -1\n", &msg) == 1);
        CHECK(contains(msg, "positive"));
        CHECK(error_line("run.z = ,\n", &msg) == 1);
        CHECK(contains(msg, "empty list entry"));
        CHECK(error_line("trial.b = 3\n", &msg) == 1);
        CHECK(contains(msg, "must be 1 or 2"));
        CHECK(error_line("run.mu = 0\n") == 1);
        CHECK(error_line("run.mode = fancy\n", &msg) == 1);
        CHECK(contains(msg, "normalized, paper, or both"));
        CHECK(error_line("output.format = xml\n", &msg) == 1);
        CHECK(contains(msg, "csv, json, or both"));
        CHECK(error_line("exact.richardson = maybe\n", &msg) == 1);
        CHECK(contains(msg, "true or false"));
        CHECK(error_line("density.samples = 2.5\n", &msg) == 1);
        CHECK(contains(msg, "whole number"));
        CHECK(error_line("solver.scan_points = -3\n", &msg) == 1);
        CHECK(contains(msg, "whole number"));
        CHECK(error_line("potential.C = 0.1\n", &msg) == 1);
        CHECK(contains(msg, "only to the global model"));
        CHECK(error_line("potential.model = wood\n", &msg) == 1);
        CHECK(contains(msg, "cornell or global"));
    }
    SECTION("semantic range failures surface from validation") {
        CHECK_THROWS_AS(parse_config("density.samples = 1\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_config("solver.a_min = 0\n"), std::invalid_argument);
        CHECK_THROWS_AS(parse_config("exact.n_interior = 4\n"), std::invalid_argument);
    }
}

TEST_CASE("config validation rejects out-of-domain values set directly") {
    RunConfig cfg;
    cfg.trial_b = 1.5;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = {};
    cfg.z_values.clear();
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = {};
    cfg.z_values = {1.0, -2.0};
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = {};
    cfg.mu = 0.0;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = {};
    cfg.output_dir.clear();
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    CHECK_NOTHROW(validate(RunConfig{}));
}

TEST_CASE("mode selection expands to the expectation modes in a fixed order") {
    CHECK(expectation_modes(ModeSelection::normalized) ==
          std::vector<ExpectationMode>{ExpectationMode::normalized});
    CHECK(expectation_modes(ModeSelection::paper) ==
          std::vector<ExpectationMode>{ExpectationMode::unnormalized});
    CHECK(expectation_modes(ModeSelection::both) ==
          std::vector<ExpectationMode>{ExpectationMode::normalized,
                                       ExpectationMode::unnormalized});
}

TEST_CASE("configs load from disk") {
    const std::string path = "test_config_tmp.cfg";
    {
        std::ofstream os(path);
        os << "run.z = 2\nrun.mu = 0.5\n";
    }
    const RunConfig cfg = load_config(path);
    CHECK(cfg.z_values == std::vector<double>{2.0});
    CHECK(cfg.mu == 0.5);
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_config("no_such_file.cfg"), std::invalid_argument);
}
