#pragma once

#include <string>
#include <vector>

#include "odvp/biharmonic.hpp"

namespace odvp {

enum class ConditionId {
    kQsIntegral,
    kBIntegral,
    kProportionalReduction,
    kHolderP,
    kInterpolationTheta,
    kEigenvalue,
    kHardyTransfer,
    kSignCondition,
    kMeanTransfer,
};

const char* condition_name(ConditionId id);

/// One evaluated existence condition. margin = lhs - rhs; the condition holds
/// iff margin > 0 strictly (margin 0 does not hold).
struct ConditionReport {
    ConditionId id{};
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool holds = false;
    std::string annotation;
    std::vector<std::string> warnings;
};

/// Laplacian problem: total source strength in the core must strictly exceed
/// the total flux the core boundary could carry: \int_C f > \int_{dC} g.
/// Warns when g is decreasing somewhere on [R, rho_max].
ConditionReport check_qs(const ProblemSpec& spec);

/// Plate problem: (\int_{dC} sqrt(g))^2 < (\int_C f)(\int_C u_C) with u_C the
/// core Poisson solution; lhs is the energy product, rhs the boundary term.
ConditionReport check_b(const ProblemSpec& spec);

/// With slope and shear proportional (factor lambda), the plate condition
/// collapses to the Laplacian condition with boundary data sqrt(lambda g).
ConditionReport check_proportional_reduction(const ProblemSpec& spec, double lambda);

/// \int_C f > (\int_{dC} g^p)^{1/p} |dC|^{1-1/p}; implies the QS condition.
ConditionReport check_holder(const ProblemSpec& spec, double p);

/// Lp interpolation between exponents 1 and s at 1/r = theta/s + (1-theta).
ConditionReport check_interpolation(const ProblemSpec& spec, double r, double s);

/// First Dirichlet eigenvalue of the ball, (j/R)^2 with j = pi for N = 3 and
/// the first J_0 zero for N = 2. Other dimensions are rejected.
double dirichlet_lambda1(int dimension, double radius);

/// alpha \int_C f^2 > \int_{dC} g for alpha >= 1/lambda_1(C).
ConditionReport check_eigenvalue(const ProblemSpec& spec, double alpha);

/// Weighted Hardy transfer on the ball with d(r) = rho - r:
/// c \int |u'|^p >= \int |u/d|^p for c >= (p/(p-1))^p. Both sides by
/// adaptive quadrature; u must vanish at rho.
ConditionReport check_hardy(const RadialProfile& u, int dimension, double rho, double p,
                            double c, double quad_tol = 1e-12);

/// For superharmonic positive weights phi (radial Laplacian <= 0 on the core):
/// \int_C f phi >= \int_{dC} |grad u_C| phi, with the exact Green
/// decomposition residual recorded in the report.
ConditionReport check_sign_condition(const ProblemSpec& spec, const RadialProfile& phi);

/// Pointwise means of a family of positive profiles; QS condition for each of
/// min, harmonic, geometric, arithmetic, quadratic, max (in that order).
/// The means ordering is verified pointwise on the shared sample grid.
std::vector<ConditionReport> check_mean_transfer(const std::vector<RadialProfile>& fs,
                                                 const ProblemSpec& spec);

/// Constant-g thresholds: largest c for which each condition holds, computed
/// from the integrals (never from closed-form shortcuts).
struct HierarchyReport {
    double qs_threshold = 0.0;  ///< \int_C f / |dC|
    double b_threshold = 0.0;   ///< (\int_C f)(\int_C u_C) / |dC|^2
    double ratio = 0.0;         ///< qs_threshold / b_threshold
    double g_value = 0.0;
    ConditionReport qs;
    ConditionReport b;
    std::string warning;
};

HierarchyReport hierarchy_report(const ProblemSpec& spec);

}  // namespace odvp
