// hardwall: variational and finite-difference ground states in a hard-wall
// sphere. Subcommands cover single solves, cutoff sweeps, reference-table
// comparison, density/WFO curve export, eigenfunction export, and the
// consolidated validation report.
//
// Exit codes: 0 success, 1 config or usage error, 2 numerical failure,
// 3 validation failure.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hardwall/hardwall.hpp"

int main(int argc, char** argv) {
    CLI::App app{"hard-wall variational ground-state solver"};
    app.require_subcommand(1);

    std::string config_path, out_dir, mode_flag, format_flag;
    app.add_option("--config", config_path, "config file (section.key = value lines)")
        ->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "output directory (overrides output.dir)");
    app.add_option("--mode", mode_flag, "energy convention to run (overrides run.mode)")
        ->check(CLI::IsMember({"paper", "normalized", "both"}));
    app.add_option("--format", format_flag, "output format (overrides output.format)")
        ->check(CLI::IsMember({"csv", "json", "both"}));

    auto* sc_solve = app.add_subcommand("solve", "optimize the trial state at a single cutoff");
    auto* sc_sweep = app.add_subcommand("sweep", "optimize across the configured cutoff list");
    auto* sc_tables =
        app.add_subcommand("tables", "compare bundled reference rows under four conventions");
    auto* sc_density = app.add_subcommand("density", "export |psi|^2 curves at the optimum");
    auto* sc_wfo = app.add_subcommand("wfo-curve", "export wavefunction-at-origin versus cutoff");
    auto* sc_validate = app.add_subcommand("validate", "run the consolidated validation report");
    auto* sc_exact = app.add_subcommand("exact", "finite-difference ground states and eigenfunctions");
    for (CLI::App* sc : {sc_solve, sc_sweep, sc_tables, sc_density, sc_wfo, sc_validate, sc_exact})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        hardwall::RunConfig cfg =
            config_path.empty() ? hardwall::RunConfig{} : hardwall::load_config(config_path);
        if (!out_dir.empty()) cfg.output_dir = out_dir;
        if (!mode_flag.empty())
            cfg.mode = mode_flag == "paper"  ? hardwall::ModeSelection::paper
                       : mode_flag == "both" ? hardwall::ModeSelection::both
                                             : hardwall::ModeSelection::normalized;
        if (!format_flag.empty())
            cfg.format = format_flag == "json"   ? hardwall::OutputFormat::json
                         : format_flag == "both" ? hardwall::OutputFormat::both
                                                 : hardwall::OutputFormat::csv;

        if (app.got_subcommand(sc_solve)) {
            hardwall::run_solve(cfg, std::cout);
        } else if (app.got_subcommand(sc_sweep)) {
            hardwall::run_sweep(cfg, std::cout);
        } else if (app.got_subcommand(sc_tables)) {
            hardwall::run_tables(cfg, std::cout);
        } else if (app.got_subcommand(sc_density)) {
            hardwall::run_density(cfg, std::cout);
        } else if (app.got_subcommand(sc_wfo)) {
            hardwall::run_wfo_curve(cfg, std::cout);
        } else if (app.got_subcommand(sc_validate)) {
            const hardwall::ValidationOutcome v = hardwall::run_validate(cfg, std::cout);
            if (!v.ok) return 3;
        } else if (app.got_subcommand(sc_exact)) {
            hardwall::run_exact(cfg, std::cout);
        }
    } catch (const hardwall::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
