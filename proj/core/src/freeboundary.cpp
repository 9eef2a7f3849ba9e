#include "odvp/freeboundary.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace odvp {

namespace {

constexpr int kScanPoints = 512;
constexpr int kMaxRootIterations = 200;

struct GridRoots {
    std::vector<std::pair<double, double>> brackets;  // strict sign changes
    std::vector<double> grid_zeros;                   // interior grid points with |v| ~ 0
    bool zero_at_core = false;
    int sign_changes = 0;
};

GridRoots scan_grid(const std::function<double(double)>& fn, double lo, double hi,
                    double zero_tol) {
    GridRoots out;
    double prev_x = lo;
    double prev_v = fn(lo);
    bool prev_zero = std::abs(prev_v) <= zero_tol;
    if (prev_zero) out.zero_at_core = true;
    for (int i = 1; i <= kScanPoints; ++i) {
        const double x = lo + (hi - lo) * i / kScanPoints;
        const double v = fn(x);
        const bool zero = std::abs(v) <= zero_tol;
        if (zero) {
            out.grid_zeros.push_back(x);
            ++out.sign_changes;
        } else if (!prev_zero && prev_v * v < 0.0) {
            out.brackets.emplace_back(prev_x, x);
            ++out.sign_changes;
        }
        prev_x = x;
        prev_v = v;
        prev_zero = zero;
    }
    return out;
}

struct RefineOutcome {
    double root;
    double residual;
    int iterations;
};

RefineOutcome refine_root(const std::function<double(double)>& fn, double lo, double hi,
                          bool use_secant) {
    double f_lo = fn(lo);
    double f_hi = fn(hi);
    int iterations = 0;
    while (iterations < kMaxRootIterations) {
        const double width_tol =
            std::max(1e-13 * std::max(1.0, std::abs(hi)),
                     4.0 * std::numeric_limits<double>::epsilon() * std::abs(hi));
        if (hi - lo <= width_tol) break;
        double mid = 0.5 * (lo + hi);
        if (use_secant && f_hi != f_lo) {
            const double secant = lo - f_lo * (hi - lo) / (f_hi - f_lo);
            if (secant > lo + 0.125 * width_tol && secant < hi - 0.125 * width_tol)
                mid = secant;
        }
        const double f_mid = fn(mid);
        ++iterations;
        if (f_mid == 0.0) {
            lo = hi = mid;
            f_lo = f_hi = 0.0;
            break;
        }
        if ((f_lo < 0.0) == (f_mid < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    const double root = 0.5 * (lo + hi);
    return {root, fn(root), iterations};
}

/// Smallest root of fn on (R, rho_max]; fills the scan bookkeeping fields.
RootResult find_smallest_root(const std::function<double(double)>& fn, double lo,
                              double hi, double zero_tol, bool use_secant) {
    const GridRoots grid = scan_grid(fn, lo, hi, zero_tol);
    RootResult result;
    result.multiplicity_note = grid.sign_changes;
    if (grid.zero_at_core)
        result.notes.push_back(
            "deficit vanishes at the core radius itself; rejected (the free boundary "
            "must strictly contain the core)");

    double first_bracket_lo = std::numeric_limits<double>::infinity();
    if (!grid.brackets.empty()) first_bracket_lo = grid.brackets.front().first;
    const bool grid_zero_first =
        !grid.grid_zeros.empty() && grid.grid_zeros.front() < first_bracket_lo;

    if (grid_zero_first) {
        result.critical_radius = grid.grid_zeros.front();
        result.residual = fn(result.critical_radius);
        result.bracket_lo = result.bracket_hi = result.critical_radius;
        result.iterations = 0;
        return result;
    }
    if (grid.brackets.empty())
        throw BracketNotFound("deficit does not change sign below rho_max", fn(hi));

    const auto [bracket_lo, bracket_hi] = grid.brackets.front();
    const RefineOutcome refined = refine_root(fn, bracket_lo, bracket_hi, use_secant);
    result.critical_radius = refined.root;
    result.residual = refined.residual;
    result.bracket_lo = bracket_lo;
    result.bracket_hi = bracket_hi;
    result.iterations = refined.iterations;
    return result;
}

double interior_g_integral(const ProblemSpec& spec, double rho) {
    if (!spec.g().covers(rho))
        throw GInteriorUndefined("boundary data must cover [0, rho] for this functional");
    return volume_integral(spec.g().piecewise(rho), spec.ball(rho));
}

}  // namespace

const char* functional_name(Functional fn) {
    switch (fn) {
        case Functional::kJ: return "J";
        case Functional::kF: return "F";
        case Functional::kPhi: return "phi";
        case Functional::kQsDeficit: return "qs-deficit";
        case Functional::kPsi: return "psi";
    }
    return "unknown";
}

double qs_deficit(const ProblemSpec& spec, double rho) {
    const double total_f = volume_integral(spec.f(), spec.core());
    return total_f - surface_integral_value(spec.g().eval(rho), spec.ball(rho));
}

double b_deficit(const ProblemSpec& spec, double rho) {
    const double total_f = volume_integral(spec.f(), spec.core());
    const double boundary =
        surface_integral_value(std::sqrt(spec.g().eval(rho)), spec.ball(rho));
    const PoissonSolution sol =
        solve_poisson(spec.f(), spec.ball(rho), spec.tolerances().identity_tol);
    return boundary * boundary - total_f * sol.total_mass;
}

double pointwise_deficit(const ProblemSpec& spec, double rho) {
    const BiharmonicSolution sol =
        solve_biharmonic(spec.f(), spec.ball(rho), spec.tolerances().identity_tol);
    return sol.edge_product - spec.g().eval(rho);
}

RootResult solve_qs(const ProblemSpec& spec, bool use_secant) {
    const ConditionReport cond = check_qs(spec);
    if (!cond.holds)
        throw NoSolutionCertificate(
            "QS condition fails: total source does not exceed the core boundary flux",
            cond.lhs, cond.rhs);

    const double scale = std::abs(volume_integral(spec.f(), spec.core()));
    const auto deficit = [&spec](double rho) { return qs_deficit(spec, rho); };
    RootResult result =
        find_smallest_root(deficit, spec.core_radius(), spec.rho_max(),
                           1e-13 * std::max(1.0, scale), use_secant);

    const PoissonSolution at_root = solve_poisson(
        spec.f(), spec.ball(result.critical_radius), spec.tolerances().identity_tol);
    result.pointwise_check =
        std::abs(at_root.boundary_gradient - spec.g().eval(result.critical_radius));
    if (result.multiplicity_note > 1)
        result.notes.push_back(
            "multiple sign changes found; the smallest root is reported (uniqueness "
            "needs r^{N-1} g(r) increasing)");
    return result;
}

RootResult solve_b(const ProblemSpec& spec, bool force, bool use_secant) {
    const ConditionReport cond = check_b(spec);
    if (!cond.holds && !force)
        throw NoSolutionCertificate(
            "plate condition fails: squared edge-work measure is not below the "
            "internal energy product (pass force to search anyway)",
            cond.lhs, cond.rhs);

    const double scale = std::abs(cond.lhs);
    const auto deficit = [&spec](double rho) { return b_deficit(spec, rho); };
    RootResult result =
        find_smallest_root(deficit, spec.core_radius(), spec.rho_max(),
                           1e-13 * std::max(1.0, scale), use_secant);
    result.forced = force && !cond.holds;
    if (result.forced)
        result.notes.push_back(
            "sufficient condition fails, yet the deficit still changes sign: the "
            "condition is sufficient, not necessary");

    const BiharmonicSolution at_root = solve_biharmonic(
        spec.f(), spec.ball(result.critical_radius), spec.tolerances().identity_tol);
    result.pointwise_check =
        std::abs(at_root.edge_product - spec.g().eval(result.critical_radius));
    if (result.multiplicity_note > 1)
        result.notes.push_back("multiple sign changes found on the scan; smallest root "
                               "reported, count in multiplicity_note");
    return result;
}

FunctionalSample functional_J(const ProblemSpec& spec, double rho) {
    if (!spec.g().covers(rho))
        throw GInteriorUndefined("boundary data must cover [0, rho] for J");
    const BallGeometry ball = spec.ball(rho);
    const PoissonSolution sol =
        solve_poisson(spec.f(), ball, spec.tolerances().identity_tol);
    const PiecewisePower g_pw = spec.g().piecewise(rho);
    const double g_sq = volume_integral(product(g_pw, g_pw), ball);

    FunctionalSample sample;
    sample.rho = rho;
    sample.value = g_sq - sol.load_energy();
    const double g_at = spec.g().eval(rho);
    const double up = sol.boundary_gradient;
    sample.derivative = ball.surface_area() * (g_at * g_at - up * up);
    return sample;
}

FunctionalSample functional_F(const ProblemSpec& spec, double rho) {
    const double g_mass = interior_g_integral(spec, rho);
    const BallGeometry ball = spec.ball(rho);
    const BiharmonicSolution sol =
        solve_biharmonic(spec.f(), ball, spec.tolerances().identity_tol);

    const double half_u_sq =
        0.5 * volume_integral(product(sol.moment.u, sol.moment.u), ball);
    const double half_f_v =
        0.5 * volume_integral(product(sol.moment.source, sol.deflection.u), ball);
    const double scale = std::max(1.0, std::abs(half_u_sq));
    if (std::abs(half_u_sq - half_f_v) > spec.tolerances().identity_tol * scale)
        throw Error("internal: F cross-check (1/2)\\int u^2 vs (1/2)\\int f v failed");

    FunctionalSample sample;
    sample.rho = rho;
    sample.value = half_u_sq - g_mass;
    sample.derivative =
        ball.surface_area() * (sol.edge_product - spec.g().eval(rho));
    return sample;
}

namespace {

FunctionalSample sample_phi(const ProblemSpec& spec, double rho) {
    const int dim = spec.dimension();
    const BallGeometry ball = spec.ball(rho);
    const double total_f = volume_integral(spec.f(), spec.core());
    const PoissonSolution sol =
        solve_poisson(spec.f(), ball, spec.tolerances().identity_tol);

    FunctionalSample sample;
    sample.rho = rho;
    const double area = ball.surface_area();
    const double g_at = spec.g().eval(rho);
    sample.value = area * area * g_at - total_f * sol.total_mass;

    const double omega = ball.unit_area();
    const double d_area_sq = omega * omega *
                             ((2 * dim - 2) * std::pow(rho, 2 * dim - 3) * g_at +
                              std::pow(rho, 2 * dim - 2) * spec.g().derivative_at(rho));
    const double d_mass = omega * rho * sol.flux_moment.eval(rho) / dim;
    sample.derivative = d_area_sq - total_f * d_mass;
    return sample;
}

FunctionalSample sample_qs_deficit(const ProblemSpec& spec, double rho) {
    const int dim = spec.dimension();
    FunctionalSample sample;
    sample.rho = rho;
    sample.value = qs_deficit(spec, rho);
    const double omega = spec.ball(rho).unit_area();
    sample.derivative = -omega * ((dim - 1) * std::pow(rho, dim - 2) * spec.g().eval(rho) +
                                  std::pow(rho, dim - 1) * spec.g().derivative_at(rho));
    return sample;
}

FunctionalSample sample_psi(const ProblemSpec& spec, double rho) {
    const int dim = spec.dimension();
    const BiharmonicSolution sol =
        solve_biharmonic(spec.f(), spec.ball(rho), spec.tolerances().identity_tol);

    FunctionalSample sample;
    sample.rho = rho;
    sample.value = sol.edge_product - spec.g().eval(rho);

    // psi = m(rho) m_v(rho) rho^{2-2N} - g with m' = rho^{N-1} f(rho) and
    // m_v' = rho m(rho)/N (differentiating under the integral).
    const double m = sol.moment.flux_moment.eval(rho);
    const double m_v = sol.deflection.flux_moment.eval(rho);
    const double dm = std::pow(rho, dim - 1) * spec.f().eval(rho);
    const double dm_v = rho * m / dim;
    const double weight = std::pow(rho, 2 - 2 * dim);
    sample.derivative = (dm * m_v + m * dm_v) * weight +
                        (2.0 - 2.0 * dim) * m * m_v * weight / rho -
                        spec.g().derivative_at(rho);
    return sample;
}

}  // namespace

ScanResult scan(const ProblemSpec& spec, Functional fn, double rho_from, double rho_to,
                int steps) {
    if (steps < 2) throw Error("scan needs at least 2 steps");
    if (!(spec.core_radius() <= rho_from && rho_from < rho_to && rho_to <= spec.rho_max()))
        throw Error("scan grid must satisfy R <= rho_from < rho_to <= rho_max");

    ScanResult result;
    result.functional = fn;
    result.rows.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        const double rho = rho_from + (rho_to - rho_from) * i / (steps - 1);
        switch (fn) {
            case Functional::kJ: result.rows.push_back(functional_J(spec, rho)); break;
            case Functional::kF: result.rows.push_back(functional_F(spec, rho)); break;
            case Functional::kPhi: result.rows.push_back(sample_phi(spec, rho)); break;
            case Functional::kQsDeficit:
                result.rows.push_back(sample_qs_deficit(spec, rho));
                break;
            case Functional::kPsi: result.rows.push_back(sample_psi(spec, rho)); break;
        }
    }
    for (std::size_t i = 0; i + 1 < result.rows.size(); ++i)
        if (result.rows[i].value * result.rows[i + 1].value < 0.0)
            result.sign_change_brackets.emplace_back(result.rows[i].rho,
                                                     result.rows[i + 1].rho);
    return result;
}

SweepResult sweep_parameter(const ProblemSpec& base, std::span<const double> g_scales,
                            bool biharmonic_problem) {
    SweepResult result;
    result.biharmonic = biharmonic_problem;
    std::optional<double> prev_radius;
    for (double knob : g_scales) {
        SweepRow row;
        row.knob = knob;
        try {
            const ProblemSpec spec = base.with_g_scaled(knob);
            row.margin = (biharmonic_problem ? check_b(spec) : check_qs(spec)).margin;
            const RootResult root =
                biharmonic_problem ? solve_b(spec) : solve_qs(spec);
            row.critical_radius = root.critical_radius;
        } catch (const NoSolutionCertificate& e) {
            row.error = std::string("no-solution certificate: ") + e.what();
        } catch (const Error& e) {
            row.error = e.what();
        }
        if (row.critical_radius && prev_radius) {
            row.delta_prev = std::abs(*row.critical_radius - *prev_radius);
            result.max_delta = std::max(result.max_delta, row.delta_prev);
        }
        if (row.critical_radius) prev_radius = row.critical_radius;
        result.rows.push_back(std::move(row));
    }
    return result;
}

}  // namespace odvp
