#include "odvp/poisson.hpp"

#include <algorithm>
#include <cmath>

namespace odvp {

namespace {

// Sample count per segment for the residual self-check of the solve.
constexpr int kResidualSamples = 11;

std::vector<double> solve_knots(const PiecewisePower& source, double rho) {
    std::vector<double> knots{0.0, rho};
    for (const auto& seg : source.segments()) {
        if (seg.lo > 0.0 && seg.lo < rho) knots.push_back(seg.lo);
        if (seg.hi > 0.0 && seg.hi < rho) knots.push_back(seg.hi);
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    return knots;
}

void check_residual(const PoissonSolution& sol, double identity_tol) {
    double source_scale = 1.0;
    for (const auto& seg : sol.source.segments()) {
        const double mid = 0.5 * (seg.lo + seg.hi);
        source_scale = std::max(source_scale, std::abs(seg.series.eval(mid)));
    }
    for (const auto& seg : sol.u.segments()) {
        const PowerSeries lap = seg.series.radial_laplacian(sol.dimension);
        for (int s = 1; s < kResidualSamples; ++s) {
            const double r = seg.lo + (seg.hi - seg.lo) * s / kResidualSamples;
            const double residual = lap.eval(r) + sol.source.eval(r);
            if (std::abs(residual) > identity_tol * source_scale)
                throw Error("internal: Poisson residual exceeds tolerance");
        }
    }
}

}  // namespace

double PoissonSolution::u_prime(double r) const {
    if (r == 0.0) return 0.0;
    return -flux_moment.eval(r) / std::pow(r, dimension - 1);
}

PiecewisePower PoissonSolution::u_prime_series() const {
    return flux_moment.map([this](const PowerSeries& m) {
        return m.shifted(1 - dimension).scaled(-1.0);
    });
}

double PoissonSolution::dirichlet_energy() const {
    const BallGeometry ball(dimension, rho);
    const auto grad_sq = flux_moment.map([this](const PowerSeries& m) {
        return m.times(m).shifted(2 * (1 - dimension));
    });
    return volume_integral(grad_sq, ball);
}

double PoissonSolution::load_energy() const {
    return volume_integral(product(source, u), BallGeometry(dimension, rho));
}

PoissonSolution solve_poisson(const PiecewisePower& source, const BallGeometry& ball,
                              double identity_tol) {
    const int dim = ball.dimension();
    const double rho = ball.radius();
    const double support = source.empty() ? 0.0 : std::min(source.hi(), rho);

    const auto knots = solve_knots(source, rho);

    // Flux moment m(t) = \int_0^{min(t,S)} s^{N-1} f(s) ds, piece by piece.
    std::vector<PowerSegment> m_segments;
    double m_acc = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double lo = knots[i];
        const double hi = knots[i + 1];
        if (lo >= support || source.empty()) {
            m_segments.push_back({lo, hi, PowerSeries::constant(m_acc)});
            continue;
        }
        const double mid = 0.5 * (lo + hi);
        const PowerSeries anti =
            source.series_at(mid).shifted(dim - 1).antiderivative();
        const double at_lo = (lo == 0.0) ? anti.eval_limit_at_zero() : anti.eval(lo);
        PowerSeries piece = anti.plus(PowerSeries::constant(m_acc - at_lo));
        m_acc = piece.eval(hi);
        m_segments.push_back({lo, hi, std::move(piece)});
    }
    PiecewisePower flux_moment{std::move(m_segments)};

    // u(r) = \int_r^rho t^{1-N} m(t) dt, marching inward from u(rho) = 0.
    std::vector<PowerSegment> u_segments(flux_moment.segments().size());
    double u_acc = 0.0;
    for (std::size_t i = flux_moment.segments().size(); i-- > 0;) {
        const auto& mseg = flux_moment.segments()[i];
        const PowerSeries anti = mseg.series.shifted(1 - dim).antiderivative();
        const double at_hi = anti.eval(mseg.hi);
        PowerSeries piece =
            anti.scaled(-1.0).plus(PowerSeries::constant(u_acc + at_hi));
        u_acc = (mseg.lo == 0.0) ? piece.eval_limit_at_zero() : piece.eval(mseg.lo);
        u_segments[i] = {mseg.lo, mseg.hi, std::move(piece)};
    }
    PiecewisePower u{std::move(u_segments)};

    PoissonSolution sol;
    sol.dimension = dim;
    sol.rho = rho;
    sol.source = source;
    sol.flux_moment = std::move(flux_moment);
    sol.u = std::move(u);
    sol.boundary_gradient = sol.flux_moment.eval(rho) / std::pow(rho, dim - 1);
    sol.total_mass = volume_integral(sol.u, ball);

    check_residual(sol, identity_tol);
    return sol;
}

PoissonSolution solve_poisson(const RadialProfile& source, const BallGeometry& ball,
                              double identity_tol) {
    return solve_poisson(source.piecewise(ball.radius()), ball, identity_tol);
}

std::vector<PoissonSolution> iterate_poisson(const RadialProfile& source,
                                             const BallGeometry& ball, int n,
                                             double identity_tol) {
    if (n < 1) throw Error("iterate needs n >= 1");
    std::vector<PoissonSolution> chain;
    chain.reserve(n);
    chain.push_back(solve_poisson(source, ball, identity_tol));
    for (int k = 1; k < n; ++k)
        chain.push_back(solve_poisson(chain.back().u, ball, identity_tol));
    return chain;
}

}  // namespace odvp
