#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "freud/cli.hpp"

namespace {

int dispatch(const std::string& command, int table_id, const freud::cli::RunConfig& cfg,
             const std::string& out_path) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);  // binary keeps LF endings everywhere
        if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
        out = &file;
    }
    using namespace freud::cli;
    if (command == "recurrence") return cmd_recurrence(*out, cfg);
    if (command == "moments") return cmd_moments(*out, cfg);
    if (command == "zeros") return cmd_zeros(*out, cfg);
    if (command == "tables") return cmd_tables(table_id, *out, cfg);
    if (command == "suite") return cmd_suite(*out, cfg);
    if (command == "ode-check") return cmd_ode_check(*out, cfg);
    if (command == "electro") return cmd_electro(*out, cfg);
    if (command == "motion") return cmd_motion(*out, cfg);
    if (command == "figure1") return cmd_figure1(*out, cfg);
    throw std::invalid_argument("unknown command: " + command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quartic Freud weight toolkit: recurrence coefficients, mass-modified "
                 "families, ladder/holonomic checks, zero dynamics"};
    app.require_subcommand(1);

    freud::cli::RunConfig cfg;
    std::string out_path;
    int table_id = 4;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--digits", cfg.digits, "working precision in decimal digits")
            ->capture_default_str();
        sub->add_option("--n-max", cfg.n_max, "depth of the recurrence table")
            ->capture_default_str();
        sub->add_option("--out", out_path, "write output to this file instead of stdout");
        sub->add_option("--format", cfg.format, "output format: csv or json")
            ->capture_default_str();
        return sub;
    };

    auto* rec = add_common(app.add_subcommand("recurrence", "a_n^2, zeta_n and string residuals"));
    rec->add_option("--t", cfg.t, "potential parameter")->capture_default_str();

    auto* mom = add_common(app.add_subcommand("moments", "even raw moments of the weight"));
    mom->add_option("--t", cfg.t, "potential parameter")->capture_default_str();
    mom->add_option("--n", cfg.n, "highest even moment index / 2")->capture_default_str();

    auto* zer = add_common(app.add_subcommand("zeros", "zeros of one polynomial"));
    zer->add_option("--family", cfg.family, "freud | uvarov | christoffel2")->capture_default_str();
    zer->add_option("--n", cfg.n, "degree")->capture_default_str();
    zer->add_option("--t", cfg.t, "potential parameter")->capture_default_str();
    zer->add_option("--M", cfg.M, "mass at the origin")->capture_default_str();

    auto* tab = add_common(app.add_subcommand("tables", "recompute a reference table"));
    tab->add_option("which", table_id, "table id, 3..8")->required()->check(CLI::Range(3, 8));
    tab->add_option("--tol-table", cfg.tol_table, "tolerance per entry")->capture_default_str();

    auto* sui = add_common(app.add_subcommand("suite", "run every residual suite"));
    sui->add_option("--tol-string", cfg.tol_string)->capture_default_str();
    sui->add_option("--tol-toda", cfg.tol_toda)->capture_default_str();
    sui->add_option("--tol-structure", cfg.tol_structure)->capture_default_str();
    sui->add_option("--tol-ladder", cfg.tol_ladder)->capture_default_str();
    sui->add_option("--tol-ode", cfg.tol_ode)->capture_default_str();
    sui->add_option("--tol-electro", cfg.tol_electro)->capture_default_str();
    sui->add_option("--tol-motion", cfg.tol_motion)->capture_default_str();
    sui->add_option("--tol-limit", cfg.tol_limit)->capture_default_str();
    sui->add_option("--tol-rate", cfg.tol_rate)->capture_default_str();
    sui->add_flag("--corrupt", cfg.corrupt,
                  "self-test: inject a broken coefficient so the string suite must fail");

    auto* ode = add_common(app.add_subcommand("ode-check", "holonomic equation coefficients"));
    ode->add_option("--n", cfg.n, "degree")->capture_default_str();
    ode->add_option("--t", cfg.t, "potential parameter")->capture_default_str();
    ode->add_option("--M", cfg.M, "mass at the origin")->capture_default_str();
    ode->add_option("--tol-ode", cfg.tol_ode)->capture_default_str();

    auto* ele = add_common(app.add_subcommand("electro", "external field and equilibrium check"));
    ele->add_option("--m", cfg.m, "half-degree (checks Q_{2m})")->capture_default_str();
    ele->add_option("--t", cfg.t, "potential parameter")->capture_default_str();
    ele->add_option("--M", cfg.M, "mass at the origin")->capture_default_str();
    ele->add_option("--tol-electro", cfg.tol_electro)->capture_default_str();

    auto* mot = add_common(app.add_subcommand("motion", "integrate the zero-motion equations"));
    mot->add_option("--family", cfg.family, "freud | uvarov")->capture_default_str();
    mot->add_option("--n", cfg.n, "degree")->capture_default_str();
    mot->add_option("--M", cfg.M, "mass at the origin")->capture_default_str();
    mot->add_option("--t0", cfg.t0, "start time")->capture_default_str();
    mot->add_option("--t1", cfg.t1, "end time")->capture_default_str();
    mot->add_option("--steps", cfg.steps, "RK4 step count")->capture_default_str();

    add_common(app.add_subcommand("figure1", "plot-ready samples of Q3, Q5 and Q4 at t = 1"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        freud::Real::default_precision(cfg.digits);
        return dispatch(app.get_subcommands().front()->get_name(), table_id, cfg, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
