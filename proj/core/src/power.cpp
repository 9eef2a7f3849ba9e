#include "odvp/power.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace odvp {

namespace {

bool term_order(const PowerTerm& a, const PowerTerm& b) {
    return std::tie(a.exponent, a.log_power) < std::tie(b.exponent, b.log_power);
}

double eval_term(const PowerTerm& t, double r, double log_r) {
    double v = t.coefficient * std::pow(r, t.exponent);
    for (int j = 0; j < t.log_power; ++j) v *= log_r;
    return v;
}

}  // namespace

PowerSeries::PowerSeries(std::vector<PowerTerm> terms) : terms_(std::move(terms)) {
    canonicalize();
}

void PowerSeries::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), term_order);
    std::vector<PowerTerm> merged;
    for (const auto& t : terms_) {
        if (!merged.empty() && merged.back().exponent == t.exponent &&
            merged.back().log_power == t.log_power) {
            merged.back().coefficient += t.coefficient;
        } else {
            merged.push_back(t);
        }
    }
    std::erase_if(merged, [](const PowerTerm& t) { return t.coefficient == 0.0; });
    terms_ = std::move(merged);
}

PowerSeries PowerSeries::constant(double c) {
    if (c == 0.0) return PowerSeries();
    return PowerSeries({{c, 0, 0}});
}

PowerSeries PowerSeries::from_polynomial(std::span<const double> coeffs) {
    std::vector<PowerTerm> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0.0) terms.push_back({coeffs[k], static_cast<int>(k), 0});
    return PowerSeries(std::move(terms));
}

double PowerSeries::eval(double r) const {
    if (r == 0.0) return eval_limit_at_zero();
    const double log_r = std::log(r);
    double sum = 0.0;
    for (const auto& t : terms_) sum += eval_term(t, r, log_r);
    return sum;
}

double PowerSeries::eval_limit_at_zero() const {
    double sum = 0.0;
    for (const auto& t : terms_) {
        if (t.exponent > 0) continue;  // r^k log^j -> 0 for k > 0
        if (t.exponent == 0 && t.log_power == 0) {
            sum += t.coefficient;
            continue;
        }
        throw SingularAtZero("power series diverges at r = 0");
    }
    return sum;
}

PowerSeries PowerSeries::derivative() const {
    std::vector<PowerTerm> out;
    for (const auto& t : terms_) {
        if (t.exponent != 0)
            out.push_back({t.coefficient * t.exponent, t.exponent - 1, t.log_power});
        if (t.log_power > 0)
            out.push_back({t.coefficient * t.log_power, t.exponent - 1, t.log_power - 1});
    }
    return PowerSeries(std::move(out));
}

PowerSeries PowerSeries::antiderivative() const {
    std::vector<PowerTerm> out;
    for (const auto& t : terms_) {
        if (t.exponent == -1) {
            if (t.log_power + 1 > kMaxLogPower)
                throw LogClosureUnsupported(
                    "antiderivative needs log power beyond the implemented depth (" +
                    std::to_string(kMaxLogPower) + ")");
            out.push_back({t.coefficient / (t.log_power + 1), 0, t.log_power + 1});
            continue;
        }
        // By parts: ∫ r^k log^j = r^{k+1}/(k+1) log^j - j/(k+1) ∫ r^k log^{j-1}.
        const double denom = t.exponent + 1;
        double c = t.coefficient;
        for (int j = t.log_power; j >= 0; --j) {
            out.push_back({c / denom, t.exponent + 1, j});
            c *= -j / denom;
        }
    }
    return PowerSeries(std::move(out));
}

PowerSeries PowerSeries::shifted(int shift) const {
    std::vector<PowerTerm> out = terms_;
    for (auto& t : out) t.exponent += shift;
    return PowerSeries(std::move(out));
}

PowerSeries PowerSeries::times(const PowerSeries& other) const {
    std::vector<PowerTerm> out;
    out.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : other.terms_)
            out.push_back({a.coefficient * b.coefficient, a.exponent + b.exponent,
                           a.log_power + b.log_power});
    return PowerSeries(std::move(out));
}

PowerSeries PowerSeries::plus(const PowerSeries& other) const {
    std::vector<PowerTerm> out = terms_;
    out.insert(out.end(), other.terms_.begin(), other.terms_.end());
    return PowerSeries(std::move(out));
}

PowerSeries PowerSeries::scaled(double factor) const {
    std::vector<PowerTerm> out = terms_;
    for (auto& t : out) t.coefficient *= factor;
    return PowerSeries(std::move(out));
}

PowerSeries PowerSeries::radial_laplacian(int dimension) const {
    const PowerSeries d1 = derivative();
    return d1.derivative().plus(d1.shifted(-1).scaled(dimension - 1));
}

bool PowerSeries::has_negative_exponent() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const PowerTerm& t) { return t.exponent < 0; });
}

bool PowerSeries::has_log() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const PowerTerm& t) { return t.log_power > 0; });
}

PiecewisePower::PiecewisePower(std::vector<PowerSegment> segments)
    : segments_(std::move(segments)) {
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        if (!(segments_[i].lo < segments_[i].hi))
            throw InvalidSpec("piecewise segment must have lo < hi");
        if (i > 0 && segments_[i].lo != segments_[i - 1].hi)
            throw InvalidSpec("piecewise segments must be contiguous");
    }
}

double PiecewisePower::eval(double r) const {
    if (segments_.empty() || r < lo() || r > hi()) return 0.0;
    return series_at(r).eval(r);
}

const PowerSeries& PiecewisePower::series_at(double r) const {
    if (segments_.empty()) throw Error("series_at on empty piecewise function");
    auto it = std::upper_bound(
        segments_.begin(), segments_.end(), r,
        [](double value, const PowerSegment& seg) { return value < seg.hi; });
    if (it == segments_.end()) --it;
    return it->series;
}

PiecewisePower product(const PiecewisePower& a, const PiecewisePower& b) {
    if (a.empty() || b.empty()) return PiecewisePower();
    const double lo = std::max(a.lo(), b.lo());
    const double hi = std::min(a.hi(), b.hi());
    if (!(lo < hi)) return PiecewisePower();

    std::vector<double> knots{lo, hi};
    for (const auto& seg : a.segments()) {
        if (seg.lo > lo && seg.lo < hi) knots.push_back(seg.lo);
        if (seg.hi > lo && seg.hi < hi) knots.push_back(seg.hi);
    }
    for (const auto& seg : b.segments()) {
        if (seg.lo > lo && seg.lo < hi) knots.push_back(seg.lo);
        if (seg.hi > lo && seg.hi < hi) knots.push_back(seg.hi);
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

    std::vector<PowerSegment> out;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double mid = 0.5 * (knots[i] + knots[i + 1]);
        out.push_back({knots[i], knots[i + 1], a.series_at(mid).times(b.series_at(mid))});
    }
    return PiecewisePower(std::move(out));
}

}  // namespace odvp
