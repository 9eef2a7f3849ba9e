#pragma once

#include <vector>

#include "odvp/power.hpp"

namespace odvp {

/// Gamma at integer or half-integer argument 2x = twice_x, by the recurrence
/// from Gamma(1) = 1 and Gamma(1/2) = sqrt(pi).
double gamma_half_integer(int twice_x);

/// Surface area of the unit sphere in R^N: 2 pi^{N/2} / Gamma(N/2).
double unit_sphere_area(int dimension);

/// A ball B_rho in R^N, N >= 2.
class BallGeometry {
public:
    BallGeometry(int dimension, double radius);

    int dimension() const { return dimension_; }
    double radius() const { return radius_; }
    double unit_area() const { return unit_area_; }               // omega_N
    double surface_area() const;                                  // omega_N rho^{N-1}
    double volume() const;                                        // omega_N rho^N / N

private:
    int dimension_;
    double radius_;
    double unit_area_;
};

/// One polynomial segment of a radial profile; coeffs ascending in degree.
struct ProfileSegment {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> coeffs;
};

/// Piecewise-polynomial radial function r -> p(r). Segments are contiguous
/// and start at 0. Beyond the support radius the value is 0, or the last
/// segment's polynomial extended when extend_last is set (boundary data g).
/// Values must be >= 0 on the support (sources and boundary data are
/// nonnegative); immutable after construction.
class RadialProfile {
public:
    explicit RadialProfile(std::vector<ProfileSegment> segments, bool extend_last = false);

    static RadialProfile constant(double value, double support_radius,
                                  bool extend_last = false);
    static RadialProfile polynomial(std::vector<double> coeffs, double support_radius,
                                    bool extend_last = false);

    double support_radius() const { return segments_.back().hi; }
    bool extend_last() const { return extend_last_; }
    const std::vector<ProfileSegment>& segments() const { return segments_; }

    double eval(double r) const;
    double derivative_at(double r) const;

    /// Pointwise scaling (factor >= 0 to preserve nonnegativity).
    RadialProfile scaled(double factor) const;

    /// Power-series view covering [0, up_to]: truncates at up_to, extends the
    /// last polynomial when extend_last, otherwise stops at the support
    /// (eval is 0 beyond either way).
    PiecewisePower piecewise(double up_to) const;

    /// True when [0, up_to] is covered (needed for interior integrals of g).
    bool covers(double up_to) const;

private:
    std::vector<ProfileSegment> segments_;
    bool extend_last_;
    const ProfileSegment& segment_for(double r) const;
};

/// Radial Laplacian p'' + (N-1) p'/r of a piecewise polynomial, exact on each
/// open segment. Throws NonSmoothAtKnot if the first segment touches r = 0
/// with p'(0) != 0 (the 1/r factor would be singular).
PiecewisePower radial_laplacian(const RadialProfile& profile, int dimension);

/// Same for general power series; a negative power created on the segment
/// containing r = 0 throws NonSmoothAtKnot.
PiecewisePower radial_laplacian(const PiecewisePower& fn, int dimension);

struct Tolerances {
    double quad_tol = 1e-12;
    double root_tol = 1e-10;
    double identity_tol = 1e-10;
};

/// A fully specified radial problem instance: dimension, core ball B_R
/// carrying the source f, boundary data g on [R, rho_max], and tolerances.
class ProblemSpec {
public:
    ProblemSpec(int dimension, double core_radius, double rho_max, RadialProfile f,
                RadialProfile g, Tolerances tol = {});

    int dimension() const { return dimension_; }
    double core_radius() const { return core_radius_; }
    double rho_max() const { return rho_max_; }
    const RadialProfile& f() const { return f_; }
    const RadialProfile& g() const { return g_; }
    const Tolerances& tolerances() const { return tol_; }

    BallGeometry core() const { return {dimension_, core_radius_}; }
    BallGeometry ball(double rho) const { return {dimension_, rho}; }

    ProblemSpec with_g_scaled(double factor) const;
    ProblemSpec with_rho_max(double rho_max) const;
    ProblemSpec with_tolerances(Tolerances tol) const;

private:
    int dimension_;
    double core_radius_;
    double rho_max_;
    RadialProfile f_;
    RadialProfile g_;
    Tolerances tol_;
};

}  // namespace odvp
