#pragma once

#include <string>

#include "odvp/radial.hpp"

namespace odvp {

/// A parsed spec file: the problem instance plus a canonical echo of the
/// parsed content (deterministic JSON, independent of input whitespace).
struct SpecFile {
    ProblemSpec spec;
    std::string canonical_echo;
};

/// Parse a JSON problem file. Required fields: dimension, core_radius,
/// rho_max, f.segments, g.segments; optional: tolerances, extend_last per
/// profile (f defaults false, g defaults true). Malformed input throws
/// SpecParseError with a line/field diagnostic. The ODVP_DEFAULT_TOL
/// environment variable, when set, overrides identity_tol.
SpecFile parse_spec_file(const std::string& path);
SpecFile parse_spec_text(const std::string& text);

}  // namespace odvp
