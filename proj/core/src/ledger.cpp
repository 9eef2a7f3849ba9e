#include "odvp/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace odvp {

namespace {

IdentityCheck grade(IdentityId id, double lhs, double rhs, double tol,
                    std::string notes = {}) {
    IdentityCheck check;
    check.id = id;
    check.lhs = lhs;
    check.rhs = rhs;
    check.residual = std::abs(lhs - rhs);
    check.pass = check.residual < tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
    check.notes = std::move(notes);
    return check;
}

RadialProfile torsion_profile(double rho, int dimension) {
    // (rho^2 - r^2) / (2N)
    return RadialProfile::polynomial(
        {rho * rho / (2.0 * dimension), 0.0, -1.0 / (2.0 * dimension)}, rho);
}

}  // namespace

const char* identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::kGreen: return "GREEN";
        case IdentityId::kEnergy: return "ENERGY";
        case IdentityId::kPohozaev: return "POHOZAEV";
        case IdentityId::kReilly: return "REILLY";
        case IdentityId::kCauchyProduct: return "CAUCHY_PRODUCT";
        case IdentityId::kDuality: return "DUALITY";
        case IdentityId::kIteratedGreen: return "ITERATED_GREEN";
        case IdentityId::kMeansOrder: return "MEANS_ORDER";
        case IdentityId::kEqualityCase: return "EQUALITY_CASE";
    }
    return "UNKNOWN";
}

IdentityCheck check_green(const RadialProfile& f, const BallGeometry& ball, double tol) {
    const PoissonSolution sol = solve_poisson(f, ball, tol);
    const double lhs = volume_integral(f, ball);
    const double rhs = surface_integral_value(sol.boundary_gradient, ball);
    return grade(IdentityId::kGreen, lhs, rhs, tol,
                 "total source vs. boundary flux of the Dirichlet solution");
}

IdentityCheck check_energy(const RadialProfile& f, const BallGeometry& ball, double tol) {
    const PoissonSolution sol = solve_poisson(f, ball, tol);
    return grade(IdentityId::kEnergy, sol.dirichlet_energy(), sol.load_energy(), tol,
                 "Dirichlet energy vs. source work");
}

IdentityCheck check_plate_energy(const RadialProfile& f, const BallGeometry& ball,
                                 double tol) {
    const BiharmonicSolution sol = solve_biharmonic(f, ball, tol);
    const double u_sq = volume_integral(product(sol.moment.u, sol.moment.u), ball);
    const double f_v = volume_integral(product(sol.moment.source, sol.deflection.u), ball);
    return grade(IdentityId::kEnergy, u_sq, f_v, tol,
                 "plate energy: squared bending moment vs. load times deflection");
}

IdentityCheck check_pohozaev(double rho, int dimension, double tol) {
    if (dimension < 3)
        throw UnsupportedDimension(
            "Pohozaev balance degenerates for N = 2 (the (N-2)/2 factor vanishes)");
    const BallGeometry ball(dimension, rho);
    const RadialProfile u = torsion_profile(rho, dimension);

    // |grad u|^2 = r^2 / N^2 for the torsion function.
    const PiecewisePower grad_sq = PiecewisePower(
        {{0.0, rho, PowerSeries({{1.0 / (dimension * dimension), 2, 0}})}});
    const double energy = volume_integral(grad_sq, ball);
    const double lhs = 0.5 * (dimension - 2) * energy;
    const double boundary = 0.5 * rho * ball.surface_area() *
                            (rho / dimension) * (rho / dimension);
    const double rhs = dimension * volume_integral(u, ball) - boundary;
    return grade(IdentityId::kPohozaev, lhs, rhs, tol,
                 "star-shaped balance for the torsion function (scales like rho^{N+2})");
}

IdentityCheck check_reilly(double rho, int dimension, bool corrected_sign, double tol) {
    const BallGeometry ball(dimension, rho);
    // Torsion Hessian is -(1/N) I, so |D^2 u|^2 = 1/N and (Lap u)^2 = 1.
    const double hessian_sq = ball.volume() / dimension;
    const double laplacian_sq = ball.volume();
    const double mean_curvature = (dimension - 1) / rho;
    const double grad_sq_at_rho = (rho / dimension) * (rho / dimension);
    const double rhs = ball.surface_area() * mean_curvature * grad_sq_at_rho;

    const double corrected = laplacian_sq - hessian_sq;
    const double printed = hessian_sq - laplacian_sq;
    const double lhs = corrected_sign ? corrected : printed;
    std::string notes =
        "H = (N-1)/rho (sum of principal curvatures); orientation residuals: "
        "corrected " +
        std::to_string(std::abs(corrected - rhs)) + ", opposite " +
        std::to_string(std::abs(printed - rhs));
    if (std::abs(printed - rhs) > tol * std::max(1.0, std::abs(rhs)))
        notes += "; the opposite orientation does not balance on balls";
    return grade(IdentityId::kReilly, lhs, rhs, tol, std::move(notes));
}

IdentityCheck check_cauchy_product(const RadialProfile& f1, const RadialProfile& f2,
                                   const BallGeometry& ball, double tol) {
    const double R = ball.radius();
    const PiecewisePower cross = product(f1.piecewise(R), f2.piecewise(R));
    const double f1_sq = volume_integral(product(f1.piecewise(R), f1.piecewise(R)), ball);
    const double f2_sq = volume_integral(product(f2.piecewise(R), f2.piecewise(R)), ball);
    const double f1_f2 = volume_integral(cross, ball);
    const double M = f1_f2 / f2_sq;

    const PoissonSolution v = solve_poisson(cross, ball, tol);
    const double boundary_flux = surface_integral_value(v.boundary_gradient, ball);

    IdentityCheck check;
    check.id = IdentityId::kCauchyProduct;
    check.lhs = f1_sq;
    check.rhs = M * boundary_flux;
    check.residual = std::abs(check.lhs - check.rhs);
    const double scale = std::max({1.0, std::abs(check.lhs), std::abs(check.rhs)});
    check.pass = check.lhs >= check.rhs - tol * scale;
    const bool equal = check.residual < tol * scale;
    check.notes = equal ? "equality: inputs proportional"
                        : "strict inequality: inputs not proportional";
    const double green_residual = std::abs(boundary_flux - f1_f2);
    if (green_residual > tol * std::max(1.0, std::abs(f1_f2)))
        check.notes += "; warning: boundary flux disagrees with \\int f1 f2";
    return check;
}

DualityResult check_duality(const ProblemSpec& spec) {
    const BallGeometry core = spec.core();
    const double tol = spec.tolerances().identity_tol;
    const PoissonSolution core_state = solve_poisson(spec.f(), core, tol);
    const double sqrt_g_mass =
        surface_integral_value(std::sqrt(spec.g().eval(core.radius())), core);
    const double total_f = volume_integral(spec.f(), core);
    const double total_u = core_state.total_mass;

    DualityResult result;
    result.kappa1 = sqrt_g_mass / total_u;
    result.kappa2 = sqrt_g_mass / total_f;
    const double sqrt_g_at_core = std::sqrt(spec.g().eval(core.radius()));
    result.g1_at_core = result.kappa1 * sqrt_g_at_core;
    result.g2_at_core = result.kappa2 * sqrt_g_at_core;
    result.antecedent_holds = check_b(spec).holds;

    const auto implication = [&](double qs_lhs, double qs_rhs, const char* label) {
        IdentityCheck check;
        check.id = IdentityId::kDuality;
        check.lhs = qs_lhs;
        check.rhs = qs_rhs;
        check.residual = std::abs(qs_lhs - qs_rhs);
        const bool consequent = qs_lhs > qs_rhs;
        check.pass = !result.antecedent_holds || consequent;
        check.notes = std::string(label) +
                      (result.antecedent_holds
                           ? (consequent ? ": implication holds" : ": implication FAILS")
                           : ": antecedent false, implication vacuous");
        return check;
    };
    // \int_dC g_i = kappa_i * sqrt_g_mass.
    result.first =
        implication(total_f, result.kappa1 * sqrt_g_mass, "QS(f, g1)");
    result.second =
        implication(total_u, result.kappa2 * sqrt_g_mass, "QS(u_C, g2)");
    return result;
}

IdentityCheck check_iterated_green(const RadialProfile& f_on_ball,
                                   const BallGeometry& ball, int n, double tol) {
    if (n < 1) throw Error("iterated Green chain needs n >= 1");
    const double rho = ball.radius();
    if (f_on_ball.support_radius() < rho && !f_on_ball.extend_last())
        throw InvalidSpec(
            "iterated Green chain needs a source defined on the whole ball "
            "(compact support makes the boundary terms vanish)");

    // Lap^k f as piecewise power series, k = 0..n.
    std::vector<PiecewisePower> laplacians;
    laplacians.push_back(f_on_ball.piecewise(rho));
    for (int k = 1; k <= n; ++k)
        laplacians.push_back(radial_laplacian(laplacians.back(), ball.dimension()));

    const auto chain = iterate_poisson(RadialProfile::constant(1.0, rho), ball, n, tol);

    const double lhs = volume_integral(laplacians[0], ball);
    double rhs = 0.0;
    double sign = 1.0;
    for (int k = 0; k < n; ++k) {
        rhs += sign * surface_integral_value(chain[k].boundary_gradient, ball) *
               laplacians[k].eval(rho);
        sign = -sign;
    }
    rhs += sign * volume_integral(product(chain[n - 1].u, laplacians[n]), ball);
    return grade(IdentityId::kIteratedGreen, lhs, rhs, tol,
                 "chain depth " + std::to_string(n) +
                     " with source-weighted boundary terms");
}

IdentityCheck check_means_order(std::span<const double> values, double tol) {
    if (values.empty()) throw NonPositiveInput("means need at least one value");
    for (double v : values)
        if (!(v > 0.0)) throw NonPositiveInput("means need positive values");
    const double n = static_cast<double>(values.size());

    const double minimum = *std::min_element(values.begin(), values.end());
    const double maximum = *std::max_element(values.begin(), values.end());
    double inv_sum = 0.0, log_sum = 0.0, sum = 0.0, sq_sum = 0.0;
    for (double v : values) {
        inv_sum += 1.0 / v;
        log_sum += std::log(v);
        sum += v;
        sq_sum += v * v;
    }
    const double means[6] = {minimum,          n / inv_sum, std::exp(log_sum / n),
                             sum / n,          std::sqrt(sq_sum / n),
                             maximum};

    IdentityCheck check;
    check.id = IdentityId::kMeansOrder;
    check.lhs = minimum;
    check.rhs = maximum;
    check.residual = 0.0;
    check.pass = true;
    for (int i = 0; i + 1 < 6; ++i) {
        if (means[i] > means[i + 1] * (1.0 + tol)) {
            check.pass = false;
            check.residual = std::max(check.residual, means[i] - means[i + 1]);
        }
    }
    check.notes = "min <= harmonic <= geometric <= arithmetic <= quadratic <= max";
    return check;
}

IdentityCheck check_equality_case(const ProblemSpec& spec) {
    const BallGeometry core = spec.core();
    const double tol = spec.tolerances().identity_tol;
    const double sqrt_g_mass =
        surface_integral_value(std::sqrt(spec.g().eval(core.radius())), core);
    const double lhs = sqrt_g_mass * sqrt_g_mass;
    const PoissonSolution core_state = solve_poisson(spec.f(), core, tol);
    const double rhs = volume_integral(spec.f(), core) * core_state.total_mass;

    const BiharmonicSolution plate = solve_biharmonic(spec.f(), core, tol);
    const double g_at = spec.g().eval(core.radius());

    IdentityCheck check;
    check.id = IdentityId::kEqualityCase;
    check.lhs = lhs;
    check.rhs = rhs;
    check.residual = std::abs(lhs - rhs);
    const double scale = std::max({1.0, lhs, rhs});
    check.pass = lhs <= rhs + tol * scale;
    if (check.residual < tol * scale) {
        check.notes = "equality: g equals the edge product |u'||v'| at the core "
                      "boundary (edge product " +
                      std::to_string(plate.edge_product) + " vs g " +
                      std::to_string(g_at) + ")";
    } else if (lhs < rhs) {
        check.notes = "strict inequality: edge-work measure below the energy product";
    } else {
        check.notes = "reversed: edge-work measure exceeds the energy product "
                      "(condition fails)";
    }
    return check;
}

}  // namespace odvp
