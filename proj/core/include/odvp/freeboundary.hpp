#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "odvp/existence.hpp"

namespace odvp {

/// Outcome of a critical-radius search. The defining deficit vanishes at
/// critical_radius and the pointwise overdetermined condition is re-verified
/// there from a fresh solve. multiplicity_note counts every sign change seen
/// on the coarse scan of [R, rho_max], since the sufficient condition can
/// fail while roots still exist.
struct RootResult {
    double critical_radius = 0.0;
    double residual = 0.0;  ///< deficit value at the root
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
    double pointwise_check = 0.0;  ///< |overdetermined mismatch| at the root
    int multiplicity_note = 0;     ///< sign changes on the coarse scan
    bool forced = false;
    std::vector<std::string> notes;
};

/// One sample of a shape functional along the radial family.
struct FunctionalSample {
    double rho = 0.0;
    double value = 0.0;
    double derivative = 0.0;
};

enum class Functional { kJ, kF, kPhi, kQsDeficit, kPsi };

const char* functional_name(Functional fn);

/// Laplacian deficit F(rho) = \int_C f - omega_N rho^{N-1} g(rho); its root is
/// the QS critical radius.
double qs_deficit(const ProblemSpec& spec, double rho);

/// Plate deficit Phi(rho) = (\int_{dB_rho} sqrt(g))^2 - (\int_C f) \int_{B_rho} u_rho.
double b_deficit(const ProblemSpec& spec, double rho);

/// Pointwise plate deficit psi(rho) = |u'(rho)||v'(rho)| - g(rho); vanishes
/// exactly where Phi does (for rho >= R).
double pointwise_deficit(const ProblemSpec& spec, double rho);

/// Critical radius of the Laplacian problem by coarse scan + bisection.
/// Requires check_qs to hold (NoSolutionCertificate otherwise); throws
/// BracketNotFound when the deficit never crosses zero below rho_max.
/// use_secant switches bisection to a bracketed secant; results agree within
/// root_tol either way.
RootResult solve_qs(const ProblemSpec& spec, bool use_secant = false);

/// Critical radius of the plate problem (root of Phi). Requires check_b to
/// hold unless force is set (the two-root regime past the threshold is only
/// reachable with force). A root at exactly rho = R is rejected.
RootResult solve_b(const ProblemSpec& spec, bool force = false, bool use_secant = false);

/// Domain functional of the Laplacian problem on B_rho,
/// J = \int (g^2 - |grad u|^2), with boundary-formula derivative
/// dJ/drho = omega rho^{N-1} (g(rho)^2 - u'(rho)^2). Needs g on [0, rho].
FunctionalSample functional_J(const ProblemSpec& spec, double rho);

/// Domain functional of the plate problem on B_rho, value
/// (1/2)\int u^2 - \int g (cross-checked against (1/2)\int f v - \int g), with
/// boundary-formula derivative omega rho^{N-1} (|u'||v'| - g)(rho); the
/// derivative vanishes at the plate critical radius. Needs g on [0, rho].
FunctionalSample functional_F(const ProblemSpec& spec, double rho);

struct ScanResult {
    Functional functional{};
    std::vector<FunctionalSample> rows;
    std::vector<std::pair<double, double>> sign_change_brackets;
};

/// Uniform grid of samples with analytic derivatives; steps >= 2.
ScanResult scan(const ProblemSpec& spec, Functional fn, double rho_from, double rho_to,
                int steps);

struct SweepRow {
    double knob = 0.0;
    std::optional<double> critical_radius;
    double margin = 0.0;  ///< existence-condition margin at this knob value
    double delta_prev = 0.0;
    std::string error;
};

struct SweepResult {
    bool biharmonic = false;
    std::vector<SweepRow> rows;
    double max_delta = 0.0;  ///< continuity modulus: max adjacent |R*| difference
};

/// Re-solves with the boundary data scaled by each knob value; per-row
/// failures are recorded and the sweep continues.
SweepResult sweep_parameter(const ProblemSpec& base, std::span<const double> g_scales,
                            bool biharmonic_problem);

}  // namespace odvp
