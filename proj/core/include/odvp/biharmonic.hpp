#pragma once

#include "odvp/poisson.hpp"

namespace odvp {

/// Radial solution of the simply supported plate system on B_rho,
///
///     -Laplace(v) = u,  -Laplace(u) = f,  u(rho) = v(rho) = 0,
///
/// solved as two chained Poisson solves (never a fourth-order
/// discretization). u is the bending moment, v the vertical deflection;
/// |v'(rho)| is the edge slope, |u'(rho)| the effective shear force.
struct BiharmonicSolution {
    PoissonSolution moment;      ///< u, source f
    PoissonSolution deflection;  ///< v, source u

    double shear = 0.0;         ///< |u'(rho)|
    double slope = 0.0;         ///< |v'(rho)|
    double edge_product = 0.0;  ///< slope * shear
};

BiharmonicSolution solve_biharmonic(const RadialProfile& source, const BallGeometry& ball,
                                    double identity_tol = 1e-10);
BiharmonicSolution solve_biharmonic(const PiecewisePower& source, const BallGeometry& ball,
                                    double identity_tol = 1e-10);

/// The prescribed edge-work density |u'(rho)| * |v'(rho)|.
double edge_work(const BiharmonicSolution& sol);

}  // namespace odvp
