#include "odvp/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace odvp {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (positive half; the
// Gauss weight is zero on Kronrod-only nodes).
struct NodeWeight {
    double node, gauss, kronrod;
};
constexpr NodeWeight kG7K15[8] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529}};

struct RuleResult {
    double value;
    double error;
};

RuleResult g7k15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f_mid = f(mid);
    double g7 = kG7K15[0].gauss * f_mid;
    double k15 = kG7K15[0].kronrod * f_mid;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kG7K15[i].node;
        const double pair = f(mid + dx) + f(mid - dx);
        g7 += kG7K15[i].gauss * pair;
        k15 += kG7K15[i].kronrod * pair;
    }
    return {k15 * half, std::abs(k15 - g7) * half};
}

constexpr int kMaxDepth = 48;

struct AdaptiveState {
    double value = 0.0;
    double error = 0.0;
    bool tolerance_met = true;
};

void adapt(const std::function<double(double)>& f, double a, double b, double tol,
           int depth, AdaptiveState& state) {
    const RuleResult est = g7k15(f, a, b);
    if (est.error <= tol || b - a <= 16.0 * std::numeric_limits<double>::epsilon() *
                                        std::max(std::abs(a), std::abs(b))) {
        state.value += est.value;
        state.error += est.error;
        return;
    }
    if (depth >= kMaxDepth) {
        state.value += est.value;
        state.error += est.error;
        state.tolerance_met = false;
        return;
    }
    const double mid = 0.5 * (a + b);
    adapt(f, a, mid, 0.5 * tol, depth + 1, state);
    adapt(f, mid, b, 0.5 * tol, depth + 1, state);
}

}  // namespace

double integrate_exact(const PowerSeries& series, double a, double b) {
    if (a < 0.0 || b < a) throw Error("integration bounds must satisfy 0 <= a <= b");
    if (a == b) return 0.0;
    const PowerSeries anti = series.antiderivative();
    const double at_a = (a == 0.0) ? anti.eval_limit_at_zero() : anti.eval(a);
    return anti.eval(b) - at_a;
}

double integrate_exact(const PiecewisePower& fn, double a, double b) {
    double sum = 0.0;
    for (const auto& seg : fn.segments()) {
        const double lo = std::max(a, seg.lo);
        const double hi = std::min(b, seg.hi);
        if (lo < hi) sum += integrate_exact(seg.series, lo, hi);
    }
    return sum;
}

double volume_integral(const PiecewisePower& h, const BallGeometry& ball) {
    const auto weighted = h.map([dim = ball.dimension()](const PowerSeries& s) {
        return s.shifted(dim - 1);
    });
    return ball.unit_area() * integrate_exact(weighted, 0.0, ball.radius());
}

double volume_integral(const RadialProfile& h, const BallGeometry& ball) {
    return volume_integral(h.piecewise(ball.radius()), ball);
}

double surface_integral(const RadialProfile& h, const BallGeometry& ball) {
    return surface_integral_value(h.eval(ball.radius()), ball);
}

double surface_integral_value(double h_at_rho, const BallGeometry& ball) {
    return ball.surface_area() * h_at_rho;
}

double integrate_adaptive(const std::function<double(double)>& integrand, double a,
                          double b, double tol) {
    if (tol <= 0.0) throw Error("adaptive quadrature tolerance must be positive");
    if (a == b) return 0.0;
    if (b < a) return -integrate_adaptive(integrand, b, a, tol);
    AdaptiveState state;
    adapt(integrand, a, b, tol, 0, state);
    if (!state.tolerance_met && state.error > tol)
        throw ToleranceNotMet("adaptive quadrature exhausted refinement depth",
                              state.value, state.error);
    return state.value;
}

}  // namespace odvp
