#pragma once

#include <span>
#include <vector>

#include "odvp/errors.hpp"

namespace odvp {

/// One term c * r^k * log(r)^j. Plain monomials have j = 0; the log factor
/// appears when integrating r^{-1} terms (planar solutions past the source
/// support) and is closed under differentiation, products and antiderivatives.
struct PowerTerm {
    double coefficient = 0.0;
    int exponent = 0;
    int log_power = 0;
};

/// Finite sum of PowerTerms, kept sorted by (exponent, log_power) with like
/// terms merged. Immutable value type; all operations return new series.
class PowerSeries {
public:
    /// Largest log power an antiderivative may create; one unit is consumed
    /// per r^{-1}·log^j integration, so N = 2 solve chains are depth-limited.
    static constexpr int kMaxLogPower = 8;

    PowerSeries() = default;
    explicit PowerSeries(std::vector<PowerTerm> terms);

    static PowerSeries constant(double c);
    /// Dense polynomial coefficients, ascending degree.
    static PowerSeries from_polynomial(std::span<const double> coeffs);

    /// Evaluate at r > 0; r = 0 uses the limiting value (throws SingularAtZero
    /// if any term diverges there).
    double eval(double r) const;
    double eval_limit_at_zero() const;

    PowerSeries derivative() const;

    /// Exact antiderivative. ∫ r^k log^j expands by parts; ∫ r^{-1} log^j
    /// gives log^{j+1}/(j+1) and throws LogClosureUnsupported past kMaxLogPower.
    PowerSeries antiderivative() const;

    /// Multiply by r^shift.
    PowerSeries shifted(int shift) const;
    PowerSeries times(const PowerSeries& other) const;
    PowerSeries plus(const PowerSeries& other) const;
    PowerSeries scaled(double factor) const;

    /// Radial Laplacian p'' + (dim-1) p'/r as a series (may contain r^{-1}).
    PowerSeries radial_laplacian(int dimension) const;

    bool is_zero() const { return terms_.empty(); }
    bool has_negative_exponent() const;
    bool has_log() const;
    const std::vector<PowerTerm>& terms() const { return terms_; }

private:
    std::vector<PowerTerm> terms_;
    void canonicalize();
};

/// One segment [lo, hi) carrying a PowerSeries.
struct PowerSegment {
    double lo = 0.0;
    double hi = 0.0;
    PowerSeries series;
};

/// Contiguous, non-overlapping segments. Evaluates to 0 outside [lo, hi].
class PiecewisePower {
public:
    PiecewisePower() = default;
    explicit PiecewisePower(std::vector<PowerSegment> segments);

    double eval(double r) const;
    double lo() const { return segments_.empty() ? 0.0 : segments_.front().lo; }
    double hi() const { return segments_.empty() ? 0.0 : segments_.back().hi; }
    bool empty() const { return segments_.empty(); }
    const std::vector<PowerSegment>& segments() const { return segments_; }

    /// Series of the segment containing r (the last one if r == hi).
    const PowerSeries& series_at(double r) const;

    /// Apply op segment-wise, preserving the knots.
    template <typename Op>
    PiecewisePower map(Op&& op) const {
        std::vector<PowerSegment> out;
        out.reserve(segments_.size());
        for (const auto& seg : segments_)
            out.push_back({seg.lo, seg.hi, op(seg.series)});
        return PiecewisePower(std::move(out));
    }

private:
    std::vector<PowerSegment> segments_;
};

/// Pointwise product on the union of knots; outside either domain the factor
/// counts as zero, so the product lives on the intersection.
PiecewisePower product(const PiecewisePower& a, const PiecewisePower& b);

}  // namespace odvp
