#pragma once

#include <span>
#include <string>
#include <utility>

#include "odvp/freeboundary.hpp"

namespace odvp {

enum class IdentityId {
    kGreen,
    kEnergy,
    kPohozaev,
    kReilly,
    kCauchyProduct,
    kDuality,
    kIteratedGreen,
    kMeansOrder,
    kEqualityCase,
};

const char* identity_name(IdentityId id);

/// One numerically verified identity or inequality: pass iff
/// residual < tol * max(1, |lhs|, |rhs|).
struct IdentityCheck {
    IdentityId id{};
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    bool pass = false;
    std::string notes;
};

/// Flux balance \int_{B_rho} f = omega rho^{N-1} |u'(rho)|.
IdentityCheck check_green(const RadialProfile& f, const BallGeometry& ball,
                          double tol = 1e-10);

/// Dirichlet energy \int |grad u|^2 = \int f u.
IdentityCheck check_energy(const RadialProfile& f, const BallGeometry& ball,
                           double tol = 1e-10);

/// Plate energy \int u^2 = \int f v for the chained system.
IdentityCheck check_plate_energy(const RadialProfile& f, const BallGeometry& ball,
                                 double tol = 1e-10);

/// Pohozaev balance for the torsion function on B_rho, N >= 3:
/// (N-2)/2 \int |grad u|^2 = N \int u - (rho/2) \int_{boundary} |grad u|^2.
/// N = 2 degenerates and is rejected.
IdentityCheck check_pohozaev(double rho, int dimension, double tol = 1e-10);

/// Mean-curvature balance for the torsion function with H = (N-1)/rho.
/// The orientation \int ((Du)^2 - |D^2 u|^2) = \int_b H |grad u|^2 balances on
/// balls; the opposite printed orientation does not, and both residuals are
/// reported. corrected_sign selects which one the verdict grades.
IdentityCheck check_reilly(double rho, int dimension, bool corrected_sign = true,
                           double tol = 1e-10);

/// Cauchy-Schwarz product bound: \int f1^2 >= M \int_{dC} |grad v_C| with
/// M = \int f1 f2 / \int f2^2 and v_C solving the core problem with source
/// f1 f2; equality exactly for proportional inputs.
IdentityCheck check_cauchy_product(const RadialProfile& f1, const RadialProfile& f2,
                                   const BallGeometry& ball, double tol = 1e-10);

/// Duality reduction: the plate condition implies the QS conditions for
/// (f, g1) and (u_C, g2) with g_i = kappa_i sqrt(g).
struct DualityResult {
    double kappa1 = 0.0;  ///< boundary sqrt-g mass / torsion mass of u_C
    double kappa2 = 0.0;  ///< boundary sqrt-g mass / source mass
    double g1_at_core = 0.0;
    double g2_at_core = 0.0;
    bool antecedent_holds = false;
    IdentityCheck first;   ///< QS(f, g1)
    IdentityCheck second;  ///< QS(u_C, g2)
};

DualityResult check_duality(const ProblemSpec& spec);

/// Iterated Green chain with the torsion iteration u_0, u_1, ... (source 1):
/// \int f = sum_k (-1)^k \int_b |grad u_k| Lap^k f + (-1)^n \int u_{n-1} Lap^n f.
/// f must be polynomial on the whole ball (compact support would make the
/// boundary terms vanish and the check vacuous).
IdentityCheck check_iterated_green(const RadialProfile& f_on_ball,
                                   const BallGeometry& ball, int n, double tol = 1e-10);

/// Six classical means of a positive tuple are sorted min <= harmonic <=
/// geometric <= arithmetic <= quadratic <= max.
IdentityCheck check_means_order(std::span<const double> values, double tol = 1e-12);

/// Chain (\int_{dC} sqrt(g))^2 <= \int f \int u_C with equality exactly when
/// g(R) equals the edge product |u'(R)||v'(R)|.
IdentityCheck check_equality_case(const ProblemSpec& spec);

}  // namespace odvp
