#include "odvp/radial.hpp"

#include <algorithm>
#include <cmath>

namespace odvp {

namespace {

double horner(const std::vector<double>& coeffs, double r) {
    double v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * r + *it;
    return v;
}

double horner_derivative(const std::vector<double>& coeffs, double r) {
    double v = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 1;)
        v = v * r + static_cast<double>(k) * coeffs[k];
    return v;
}

// Profiles are checked nonnegative at these many samples per segment.
constexpr int kSignSamples = 64;

}  // namespace

double gamma_half_integer(int twice_x) {
    if (twice_x <= 0) throw Error("gamma argument must be positive");
    if (twice_x == 1) return std::sqrt(M_PI);  // Gamma(1/2)
    if (twice_x == 2) return 1.0;              // Gamma(1)
    const double half_x = 0.5 * (twice_x - 2);
    return half_x * gamma_half_integer(twice_x - 2);
}

double unit_sphere_area(int dimension) {
    if (dimension < 2) throw UnsupportedDimension("dimension must be >= 2");
    return 2.0 * std::pow(M_PI, 0.5 * dimension) / gamma_half_integer(dimension);
}

BallGeometry::BallGeometry(int dimension, double radius)
    : dimension_(dimension), radius_(radius), unit_area_(unit_sphere_area(dimension)) {
    if (radius <= 0.0) throw InvalidSpec("ball radius must be positive");
}

double BallGeometry::surface_area() const {
    return unit_area_ * std::pow(radius_, dimension_ - 1);
}

double BallGeometry::volume() const {
    return unit_area_ * std::pow(radius_, dimension_) / dimension_;
}

RadialProfile::RadialProfile(std::vector<ProfileSegment> segments, bool extend_last)
    : segments_(std::move(segments)), extend_last_(extend_last) {
    if (segments_.empty()) throw InvalidSpec("profile needs at least one segment");
    if (segments_.front().lo != 0.0) throw InvalidSpec("profile segments must start at 0");
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const auto& seg = segments_[i];
        if (!(seg.lo < seg.hi)) throw InvalidSpec("profile segment must have lo < hi");
        if (i > 0 && seg.lo != segments_[i - 1].hi)
            throw InvalidSpec("profile segments must be contiguous");
        if (seg.coeffs.empty()) throw InvalidSpec("profile segment needs coefficients");
        for (int s = 0; s <= kSignSamples; ++s) {
            const double r = seg.lo + (seg.hi - seg.lo) * s / kSignSamples;
            if (horner(seg.coeffs, r) < 0.0)
                throw InvalidSpec("profile must be nonnegative on its support");
        }
    }
}

RadialProfile RadialProfile::constant(double value, double support_radius,
                                      bool extend_last) {
    return RadialProfile({{0.0, support_radius, {value}}}, extend_last);
}

RadialProfile RadialProfile::polynomial(std::vector<double> coeffs, double support_radius,
                                        bool extend_last) {
    return RadialProfile({{0.0, support_radius, std::move(coeffs)}}, extend_last);
}

const ProfileSegment& RadialProfile::segment_for(double r) const {
    auto it = std::upper_bound(
        segments_.begin(), segments_.end(), r,
        [](double value, const ProfileSegment& seg) { return value < seg.hi; });
    if (it == segments_.end()) --it;
    return *it;
}

double RadialProfile::eval(double r) const {
    if (r > support_radius()) return extend_last_ ? horner(segments_.back().coeffs, r) : 0.0;
    return horner(segment_for(r).coeffs, r);
}

double RadialProfile::derivative_at(double r) const {
    if (r > support_radius())
        return extend_last_ ? horner_derivative(segments_.back().coeffs, r) : 0.0;
    return horner_derivative(segment_for(r).coeffs, r);
}

RadialProfile RadialProfile::scaled(double factor) const {
    if (factor < 0.0) throw NonPositiveInput("profile scaling factor must be >= 0");
    std::vector<ProfileSegment> out = segments_;
    for (auto& seg : out)
        for (auto& c : seg.coeffs) c *= factor;
    return RadialProfile(std::move(out), extend_last_);
}

PiecewisePower RadialProfile::piecewise(double up_to) const {
    std::vector<PowerSegment> out;
    for (const auto& seg : segments_) {
        if (seg.lo >= up_to) break;
        out.push_back({seg.lo, std::min(seg.hi, up_to), PowerSeries::from_polynomial(seg.coeffs)});
    }
    if (extend_last_ && up_to > support_radius())
        out.push_back({support_radius(), up_to,
                       PowerSeries::from_polynomial(segments_.back().coeffs)});
    return PiecewisePower(std::move(out));
}

bool RadialProfile::covers(double up_to) const {
    return extend_last_ || support_radius() >= up_to;
}

PiecewisePower radial_laplacian(const RadialProfile& profile, int dimension) {
    const auto& first = profile.segments().front().coeffs;
    if (first.size() > 1 && first[1] != 0.0)
        throw NonSmoothAtKnot("p' has a constant term on the segment containing r = 0");
    return profile.piecewise(profile.support_radius())
        .map([dimension](const PowerSeries& s) { return s.radial_laplacian(dimension); });
}

PiecewisePower radial_laplacian(const PiecewisePower& fn, int dimension) {
    auto out = fn.map(
        [dimension](const PowerSeries& s) { return s.radial_laplacian(dimension); });
    if (!out.empty() && out.segments().front().lo == 0.0 &&
        out.segments().front().series.has_negative_exponent())
        throw NonSmoothAtKnot("radial Laplacian is singular at r = 0");
    return out;
}

ProblemSpec::ProblemSpec(int dimension, double core_radius, double rho_max, RadialProfile f,
                         RadialProfile g, Tolerances tol)
    : dimension_(dimension),
      core_radius_(core_radius),
      rho_max_(rho_max),
      f_(std::move(f)),
      g_(std::move(g)),
      tol_(tol) {
    if (dimension_ < 2) throw UnsupportedDimension("dimension must be >= 2");
    if (core_radius_ <= 0.0) throw InvalidSpec("core radius must be positive");
    if (!(core_radius_ < rho_max_)) throw InvalidSpec("core radius must be below rho_max");
    if (f_.support_radius() > core_radius_ * (1.0 + 1e-12))
        throw InvalidSpec("source support must lie inside the core ball");
    bool f_nonzero = false;
    for (int s = 0; s <= 256 && !f_nonzero; ++s)
        f_nonzero = f_.eval(f_.support_radius() * s / 256.0) > 0.0;
    if (!f_nonzero) throw InvalidSpec("source must not vanish identically");
    for (int s = 0; s <= 256; ++s) {
        const double r = core_radius_ + (rho_max_ - core_radius_) * s / 256.0;
        if (!(g_.eval(r) > 0.0))
            throw InvalidSpec("boundary data must be positive on [core_radius, rho_max]");
    }
}

ProblemSpec ProblemSpec::with_g_scaled(double factor) const {
    return {dimension_, core_radius_, rho_max_, f_, g_.scaled(factor), tol_};
}

ProblemSpec ProblemSpec::with_rho_max(double rho_max) const {
    return {dimension_, core_radius_, rho_max, f_, g_, tol_};
}

ProblemSpec ProblemSpec::with_tolerances(Tolerances tol) const {
    return {dimension_, core_radius_, rho_max_, f_, g_, tol};
}

}  // namespace odvp
