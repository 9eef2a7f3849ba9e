#pragma once

#include <string>
#include <utility>
#include <vector>

#include "odvp/existence.hpp"
#include "odvp/freeboundary.hpp"
#include "odvp/ledger.hpp"

namespace odvp {

/// Aggregated outcome of one command run. Serializes to a human-readable
/// text block or to versioned JSON; both are deterministic when timing is
/// excluded.
struct RunReport {
    std::string command;
    std::string spec_echo;  ///< canonical JSON echo of the parsed spec (may be empty)
    std::vector<ConditionReport> conditions;
    std::vector<RootResult> roots;
    std::vector<IdentityCheck> identities;
    std::vector<std::pair<std::string, double>> values;
    std::vector<std::string> warnings;
    double elapsed_seconds = 0.0;
};

std::string report_to_text(const RunReport& report, bool include_timing);
std::string report_to_json(const RunReport& report, bool include_timing);

/// Doubles rendered with 17 significant digits, '.' decimal point, ','
/// separator, LF line endings; one header row.
std::string scan_to_csv(const ScanResult& scan);
std::string sweep_to_csv(const SweepResult& sweep);

/// Locale-independent formatting with the given significant digits.
std::string format_double(double value, int significant_digits = 17);

}  // namespace odvp
