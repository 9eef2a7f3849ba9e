#pragma once

#include <functional>

#include "odvp/radial.hpp"

namespace odvp {

/// Exact integral of a power/log series over [a, b], 0 <= a <= b, via the
/// closed-form antiderivative (log branch for exponent -1). a = 0 uses the
/// limiting antiderivative value and throws SingularAtZero if it diverges.
double integrate_exact(const PowerSeries& series, double a, double b);

/// Same, segment by segment, over the part of [a, b] the function covers.
double integrate_exact(const PiecewisePower& fn, double a, double b);

/// Volume integral over the ball: omega_N * \int_0^rho h(r) r^{N-1} dr.
double volume_integral(const PiecewisePower& h, const BallGeometry& ball);
double volume_integral(const RadialProfile& h, const BallGeometry& ball);

/// Surface integral over the sphere of radius rho for radial h:
/// omega_N rho^{N-1} h(rho).
double surface_integral(const RadialProfile& h, const BallGeometry& ball);
double surface_integral_value(double h_at_rho, const BallGeometry& ball);

/// Adaptive quadrature: recursive interval bisection of a nested fixed-order
/// rule (Gauss 7 / Kronrod 15), error estimated as the difference of the two
/// orders. Cross-check oracle for the exact path; throws ToleranceNotMet
/// (carrying the best estimate and error bound) past the maximum depth.
double integrate_adaptive(const std::function<double(double)>& integrand, double a,
                          double b, double tol);

}  // namespace odvp
