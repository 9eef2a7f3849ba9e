#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "odvp/commands.hpp"

namespace {

void add_common_flags(CLI::App* cmd, odvp::CommandOptions& options) {
    cmd->add_flag("--json", options.json, "emit a machine-readable JSON report");
    cmd->add_flag("--no-timing", options.no_timing,
                  "omit timing so identical runs produce byte-identical reports");
}

void add_spec_flags(CLI::App* cmd, std::string& spec_path,
                    odvp::CommandOptions& options) {
    cmd->add_option("--spec", spec_path, "problem file (JSON)")->required();
    cmd->add_option("--rho-max", options.rho_max_override,
                    "override the search ceiling from the spec file");
    cmd->add_option("--tol", options.root_tol_override,
                    "override the root-finding tolerance");
}

int emit(const odvp::CommandResult& result) {
    std::fputs(result.output.c_str(), result.exit_code == 0 ? stdout : stderr);
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"radial overdetermined free-boundary problems: existence conditions, "
                 "critical radii, functional scans and identity verification"};
    app.require_subcommand(1);

    odvp::CommandOptions options;
    std::string spec_path;

    auto* check = app.add_subcommand("check", "evaluate existence conditions");
    std::string check_which = "all";
    add_spec_flags(check, spec_path, options);
    check->add_option("--which", check_which, "qs | b | holder:<p> | eigen:<alpha> | all");
    add_common_flags(check, options);

    auto* solve = app.add_subcommand("solve", "find the critical radius");
    std::string solve_which = "qs";
    add_spec_flags(solve, spec_path, options);
    solve->add_option("--which", solve_which, "qs | b")->required();
    solve->add_flag("--force", options.force,
                    "search for plate roots even when the sufficient condition fails");
    add_common_flags(solve, options);

    auto* scan_cmd = app.add_subcommand("scan", "sample a functional on a rho grid (CSV)");
    std::string functional = "phi";
    double rho_from = 0.0, rho_to = 0.0;
    int steps = 0;
    add_spec_flags(scan_cmd, spec_path, options);
    scan_cmd->add_option("--functional", functional, "j | f | phi | qs-deficit | psi")
        ->required();
    scan_cmd->add_option("--from", rho_from, "grid start")->required();
    scan_cmd->add_option("--to", rho_to, "grid end")->required();
    scan_cmd->add_option("--steps", steps, "row count")->required();
    scan_cmd->add_option("--out", options.out_path, "CSV output path")->required();
    add_common_flags(scan_cmd, options);

    auto* sweep = app.add_subcommand("sweep", "re-solve with scaled boundary data (CSV)");
    std::string sweep_which = "qs";
    std::vector<double> sweep_values;
    add_spec_flags(sweep, spec_path, options);
    sweep->add_option("--which", sweep_which, "qs | b")->required();
    sweep->add_option("--values", sweep_values, "boundary-data scale factors")->required();
    sweep->add_option("--out", options.out_path, "CSV output path")->required();
    add_common_flags(sweep, options);

    auto* verify = app.add_subcommand("verify", "run identity checks");
    std::string checks = "all";
    add_spec_flags(verify, spec_path, options);
    verify->add_option("--checks", checks,
                       "comma list: green, energy, plate-energy, pohozaev, reilly, "
                       "cauchy, duality, iterated-green, means-order, equality-case, all");
    add_common_flags(verify, options);

    auto* reproduce = app.add_subcommand(
        "reproduce-s8", "built-in unit-core case study (N=3, f=1, g=0.005)");
    add_common_flags(reproduce, options);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : odvp::exit_code::kParse;
    }

    if (check->parsed()) return emit(odvp::cmd_check(spec_path, check_which, options));
    if (solve->parsed()) return emit(odvp::cmd_solve(spec_path, solve_which, options));
    if (scan_cmd->parsed())
        return emit(odvp::cmd_scan(spec_path, functional, rho_from, rho_to, steps, options));
    if (sweep->parsed())
        return emit(odvp::cmd_sweep(spec_path, sweep_which, sweep_values, options));
    if (verify->parsed()) return emit(odvp::cmd_verify(spec_path, checks, options));
    if (reproduce->parsed()) return emit(odvp::cmd_reproduce_s8(options));
    return odvp::exit_code::kParse;
}
