#pragma once

#include <vector>

#include "odvp/calculus.hpp"

namespace odvp {

/// Radial solution of -Laplace(u) = f on B_rho with u(rho) = 0, u'(0) = 0,
/// obtained by the explicit double quadrature
///
///     u(r) = \int_r^rho t^{1-N} m(t) dt,   m(t) = \int_0^{min(t,S)} s^{N-1} f(s) ds,
///
/// where S is the source support radius. Everything is kept as exact
/// piecewise power/log series, so derivatives and integrals of u are exact.
/// Immutable and shareable.
struct PoissonSolution {
    int dimension = 0;
    double rho = 0.0;
    PiecewisePower source;       ///< f restricted to [0, rho]
    PiecewisePower flux_moment;  ///< m(t) on [0, rho]
    PiecewisePower u;            ///< u(r) on [0, rho]

    double boundary_gradient = 0.0;  ///< |u'(rho)| = m(rho) / rho^{N-1}
    double total_mass = 0.0;         ///< \int_{B_rho} u dx

    /// u'(r) = -m(r)/r^{N-1} (0 at r = 0 by construction of m).
    double u_prime(double r) const;
    /// Exact series for u' on each segment.
    PiecewisePower u_prime_series() const;

    /// \int_{B_rho} |u'|^2 dx, exact.
    double dirichlet_energy() const;
    /// \int_{B_rho} f u dx, exact.
    double load_energy() const;
};

PoissonSolution solve_poisson(const PiecewisePower& source, const BallGeometry& ball,
                              double identity_tol = 1e-10);
PoissonSolution solve_poisson(const RadialProfile& source, const BallGeometry& ball,
                              double identity_tol = 1e-10);

/// Iterated solves: u_0 has the given source, u_k solves with source u_{k-1}.
/// For N = 2 each step past the source support raises the log power by one;
/// the chain throws LogClosureUnsupported past PowerSeries::kMaxLogPower.
std::vector<PoissonSolution> iterate_poisson(const RadialProfile& source,
                                             const BallGeometry& ball, int n,
                                             double identity_tol = 1e-10);

}  // namespace odvp
