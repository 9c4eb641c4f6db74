#include "robin/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace robin {

namespace {

constexpr double kJoinSlack = 1e-9;

} // namespace

PiecewiseQuadratic::PiecewiseQuadratic(std::vector<Segment> segments)
    : segments_(std::move(segments)) {
    if (segments_.empty()) {
        throw std::invalid_argument("a piecewise quadratic needs at least one segment");
    }
    if (std::abs(segments_.front().lo + kPi) > kJoinSlack ||
        std::abs(segments_.back().hi - kPi) > kJoinSlack) {
        throw std::invalid_argument("segments must cover exactly [-pi, pi]");
    }
    segments_.front().lo = -kPi;
    segments_.back().hi = kPi;
    for (std::size_t k = 0; k < segments_.size(); ++k) {
        if (!(segments_[k].lo < segments_[k].hi)) {
            throw std::invalid_argument("segment " + std::to_string(k) + " has no width");
        }
        if (k > 0) {
            if (std::abs(segments_[k].lo - segments_[k - 1].hi) > kJoinSlack) {
                throw std::invalid_argument("segments must be contiguous");
            }
            segments_[k].lo = segments_[k - 1].hi;
        }
    }
}

const Segment& PiecewiseQuadratic::segment_at(double x) const {
    if (!(x >= -kPi - 1e-12 && x <= kPi + 1e-12)) {
        throw std::domain_error("x = " + std::to_string(x) + " lies outside [-pi, pi]");
    }
    x = std::clamp(x, -kPi, kPi);
    auto it = std::upper_bound(segments_.begin(), segments_.end(), x,
                               [](double v, const Segment& s) { return v < s.hi; });
    return it == segments_.end() ? segments_.back() : *it;
}

double PiecewiseQuadratic::value(double x) const { return segment_at(x).value(x); }

double PiecewiseQuadratic::slope(double x) const { return segment_at(x).slope(x); }

PiecewiseQuadratic PiecewiseQuadratic::scaled(double factor) const {
    std::vector<Segment> scaled = segments_;
    for (Segment& s : scaled) {
        s.q2 *= factor;
        s.q1 *= factor;
        s.q0 *= factor;
    }
    return PiecewiseQuadratic(std::move(scaled));
}

Extrema extrema(const PiecewiseQuadratic& u) {
    const auto& segments = u.segments();

    double min_value = segments.front().value(-kPi);
    double argmin = -kPi;
    double max_value = min_value;
    double argmax = -kPi;

    // Strict comparisons keep the leftmost extremizer on exact ties.
    auto consider = [&](double x, double v) {
        if (v > max_value) {
            max_value = v;
            argmax = x;
        }
        if (v < min_value) {
            min_value = v;
            argmin = x;
        }
    };

    for (const Segment& s : segments) {
        consider(s.lo, s.value(s.lo));
        consider(s.hi, s.value(s.hi));
        if (s.q2 != 0.0) {
            const double vertex = -s.q1 / (2.0 * s.q2);
            if (vertex > s.lo && vertex < s.hi) consider(vertex, s.value(vertex));
        }
    }

    // A flat top reports the midpoint of the whole plateau. The value match
    // tolerates rounding between a flat segment and its C^1 neighbors.
    const double plateau_slack = 1e-12 * std::max(1.0, std::abs(max_value));
    for (std::size_t k = 0; k < segments.size(); ++k) {
        if (segments[k].q2 == 0.0 && segments[k].q1 == 0.0 &&
            std::abs(segments[k].q0 - max_value) <= plateau_slack) {
            std::size_t last = k;
            while (last + 1 < segments.size() && segments[last + 1].q2 == 0.0 &&
                   segments[last + 1].q1 == 0.0 &&
                   segments[last + 1].q0 == segments[k].q0) {
                ++last;
            }
            argmax = 0.5 * (segments[k].lo + segments[last].hi);
            break;
        }
    }

    return Extrema{min_value, argmin, max_value, argmax, max_value - min_value};
}

std::pair<double, double> boundary_residuals(const PiecewiseQuadratic& u,
                                             const RobinParams& params) {
    const Segment& left = u.segments().front();
    const Segment& right = u.segments().back();
    return {-left.slope(-kPi) + params.alpha * left.value(-kPi),
            right.slope(kPi) + params.alpha * right.value(kPi)};
}

} // namespace robin
