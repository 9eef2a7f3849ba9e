#include "odvp/biharmonic.hpp"

#include <cmath>

namespace odvp {

namespace {

BiharmonicSolution chain_solves(PoissonSolution moment, const BallGeometry& ball,
                                double identity_tol) {
    BiharmonicSolution sol;
    sol.deflection = solve_poisson(moment.u, ball, identity_tol);
    sol.moment = std::move(moment);
    sol.shear = sol.moment.boundary_gradient;
    sol.slope = sol.deflection.boundary_gradient;
    sol.edge_product = sol.slope * sol.shear;

    // \int u^2 = \int f v, and the Green identity for v.
    const double u_sq = volume_integral(product(sol.moment.u, sol.moment.u), ball);
    const double f_v = volume_integral(product(sol.moment.source, sol.deflection.u), ball);
    const double scale = std::max({1.0, std::abs(u_sq), std::abs(f_v)});
    if (std::abs(u_sq - f_v) > identity_tol * scale)
        throw Error("internal: plate energy identity violated");
    const double green_v = sol.moment.total_mass / ball.surface_area();
    if (std::abs(sol.slope - green_v) > identity_tol * std::max(1.0, std::abs(sol.slope)))
        throw Error("internal: Green identity for the deflection violated");
    return sol;
}

}  // namespace

BiharmonicSolution solve_biharmonic(const RadialProfile& source, const BallGeometry& ball,
                                    double identity_tol) {
    return chain_solves(solve_poisson(source, ball, identity_tol), ball, identity_tol);
}

BiharmonicSolution solve_biharmonic(const PiecewisePower& source, const BallGeometry& ball,
                                    double identity_tol) {
    return chain_solves(solve_poisson(source, ball, identity_tol), ball, identity_tol);
}

double edge_work(const BiharmonicSolution& sol) { return sol.edge_product; }

}  // namespace odvp
