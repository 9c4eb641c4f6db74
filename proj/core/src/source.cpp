#include "robin/source.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace robin {

namespace {

constexpr double kEndpointSlack = 1e-9;

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

} // namespace

SourceClass make_class(double m, double M, double s) {
    require(std::isfinite(m) && std::isfinite(M) && std::isfinite(s),
            "source class parameters must be finite");
    require(m >= 0.0, "ground heat m must be >= 0");
    require(m < s && s < M, "source class needs m < s < M");
    const double l = kPi * (s - m) / (M - m);
    return SourceClass{m, M, s, l, m / (M - m), kPi - l};
}

StepSource::StepSource(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    require(breakpoints_.size() >= 2, "a step source needs at least one cell");
    require(breakpoints_.size() == values_.size() + 1,
            "breakpoint/value count mismatch: " + std::to_string(breakpoints_.size()) +
                " vs " + std::to_string(values_.size()));
    require(std::abs(breakpoints_.front() + kPi) <= kEndpointSlack &&
                std::abs(breakpoints_.back() - kPi) <= kEndpointSlack,
            "breakpoints must start at -pi and end at pi");
    breakpoints_.front() = -kPi;
    breakpoints_.back() = kPi;
    for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
        require(breakpoints_[k] >= breakpoints_[k - 1], "breakpoints must be nondecreasing");
        require(breakpoints_[k] >= -kPi && breakpoints_[k] <= kPi,
                "breakpoints must lie in [-pi, pi]");
    }
    for (double v : values_) {
        require(std::isfinite(v), "cell values must be finite");
    }
}

StepSource StepSource::constant(double value, std::size_t n_cells) {
    require(n_cells >= 1, "n_cells must be positive");
    std::vector<double> bp(n_cells + 1);
    for (std::size_t k = 0; k <= n_cells; ++k) {
        bp[k] = -kPi + 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n_cells);
    }
    return StepSource(std::move(bp), std::vector<double>(n_cells, value));
}

namespace {

std::vector<double> interval_breakpoints(double center, double half_length) {
    require(half_length > 0.0 && half_length <= kPi, "half_length must be in (0, pi]");
    double lo = center - half_length;
    double hi = center + half_length;
    require(lo >= -kPi - kEndpointSlack && hi <= kPi + kEndpointSlack,
            "interval I(" + std::to_string(center) + ", " + std::to_string(half_length) +
                ") is not contained in [-pi, pi]");
    lo = std::max(lo, -kPi);
    hi = std::min(hi, kPi);
    return {-kPi, lo, hi, kPi};
}

} // namespace

StepSource StepSource::class_interval(const SourceClass& cls, double center) {
    return StepSource(interval_breakpoints(center, cls.half_length),
                      {cls.m, cls.M, cls.m});
}

StepSource StepSource::baseline_interval(double center, double half_length,
                                         double baseline) {
    return StepSource(interval_breakpoints(center, half_length),
                      {baseline, baseline + 1.0, baseline});
}

double StepSource::mass() const {
    double total = 0.0;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        total += values_[k] * (breakpoints_[k + 1] - breakpoints_[k]);
    }
    return total;
}

double StepSource::value_at(double x) const {
    if (!(x >= -kPi - 1e-12 && x <= kPi + 1e-12)) {
        throw std::domain_error("x = " + std::to_string(x) + " lies outside [-pi, pi]");
    }
    x = std::clamp(x, -kPi, kPi);
    // first cell whose right breakpoint exceeds x; pi belongs to the last cell
    auto it = std::upper_bound(breakpoints_.begin() + 1, breakpoints_.end() - 1, x);
    return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

StepSource StepSource::reflected() const {
    std::vector<double> bp(breakpoints_.rbegin(), breakpoints_.rend());
    for (double& b : bp) b = -b;
    return StepSource(std::move(bp),
                      std::vector<double>(values_.rbegin(), values_.rend()));
}

bool StepSource::in_class(const SourceClass& cls, double tol) const {
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (breakpoints_[k + 1] - breakpoints_[k] <= 0.0) continue; // massless cell
        if (values_[k] < cls.m - tol || values_[k] > cls.M + tol) return false;
    }
    return std::abs(mass() - 2.0 * kPi * cls.s) <= tol;
}

StepSource IntervalSource::to_step() const {
    return StepSource::baseline_interval(center, half_length, baseline);
}

} // namespace robin
