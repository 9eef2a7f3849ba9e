#pragma once

#include <stdexcept>
#include <string>

namespace odvp {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A spec or profile violates a structural invariant (bad segments, empty f, ...).
struct InvalidSpec : Error {
    using Error::Error;
};

/// Exact integration down to r = 0 hit a negative power or a bare logarithm.
struct SingularAtZero : Error {
    using Error::Error;
};

/// The radial Laplacian of a segment touching r = 0 would divide by r.
struct NonSmoothAtKnot : Error {
    using Error::Error;
};

/// Adaptive quadrature exhausted its refinement depth. Carries the best
/// estimate and the remaining error bound.
struct ToleranceNotMet : Error {
    ToleranceNotMet(const std::string& what, double best, double bound)
        : Error(what), best_estimate(best), error_bound(bound) {}
    double best_estimate;
    double error_bound;
};

/// A log power beyond the implemented closure depth would be required
/// (only reachable through repeated N = 2 solves past the source support).
struct LogClosureUnsupported : Error {
    using Error::Error;
};

/// A root was requested but the governing existence condition fails.
struct NoSolutionCertificate : Error {
    NoSolutionCertificate(const std::string& what, double lhs_, double rhs_)
        : Error(what), lhs(lhs_), rhs(rhs_) {}
    double lhs;
    double rhs;
};

/// The deficit function never changes sign below the search ceiling.
struct BracketNotFound : Error {
    BracketNotFound(const std::string& what, double deficit)
        : Error(what), deficit_at_ceiling(deficit) {}
    double deficit_at_ceiling;
};

struct AlphaTooSmall : Error {
    using Error::Error;
};

struct CTooSmall : Error {
    using Error::Error;
};

struct PhiNotSuperharmonic : Error {
    using Error::Error;
};

struct NonPositiveInput : Error {
    using Error::Error;
};

struct NonConstantG : Error {
    using Error::Error;
};

struct UnsupportedDimension : Error {
    using Error::Error;
};

/// The boundary data must cover the ball interior for this functional.
struct GInteriorUndefined : Error {
    using Error::Error;
};

/// Spec file could not be parsed; the message carries a line/field diagnostic.
struct SpecParseError : Error {
    using Error::Error;
};

}  // namespace odvp
