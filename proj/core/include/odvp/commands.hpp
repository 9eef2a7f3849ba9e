#pragma once

#include <optional>
#include <string>
#include <vector>

#include "odvp/report.hpp"
#include "odvp/specfile.hpp"

namespace odvp {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kCertificate = 2;  ///< existence condition fails
inline constexpr int kParse = 3;        ///< spec file or usage problem
inline constexpr int kNumeric = 4;      ///< tolerance/bracket/identity failure
}  // namespace exit_code

struct CommandOptions {
    bool json = false;
    bool no_timing = false;
    bool force = false;
    std::optional<double> rho_max_override;
    std::optional<double> root_tol_override;
    std::string out_path;  ///< CSV destination for scan/sweep
};

struct CommandResult {
    int exit_code = 0;
    std::string output;
};

/// which: qs | b | holder:<p> | eigen:<alpha> | all
CommandResult cmd_check(const std::string& spec_path, const std::string& which,
                        const CommandOptions& options);

/// which: qs | b
CommandResult cmd_solve(const std::string& spec_path, const std::string& which,
                        const CommandOptions& options);

/// functional: j | f | phi | qs-deficit | psi; writes CSV to options.out_path.
CommandResult cmd_scan(const std::string& spec_path, const std::string& functional,
                       double rho_from, double rho_to, int steps,
                       const CommandOptions& options);

/// Scales the boundary data by each value and re-solves; CSV to out_path.
CommandResult cmd_sweep(const std::string& spec_path, const std::string& which,
                        const std::vector<double>& values, const CommandOptions& options);

/// checks: comma list of green, energy, plate-energy, pohozaev, reilly,
/// cauchy, duality, iterated-green, means-order, equality-case, or all.
CommandResult cmd_verify(const std::string& spec_path, const std::string& checks,
                         const CommandOptions& options);

/// Built-in three-dimensional unit-core case study: prints the exact integral
/// table, both thresholds with their ratio, and the plate critical radius for
/// boundary constant 0.005. Any identity residual beyond tolerance aborts.
CommandResult cmd_reproduce_s8(const CommandOptions& options);

}  // namespace odvp
