#include "robin/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "robin/green.hpp"

namespace robin::extremal {

namespace {

constexpr double kSlack = 1e-12;

void check_half_length(double l) {
    if (!(l > 0.0 && l < kPi)) {
        throw std::domain_error("half_length must lie in (0, pi), got " + std::to_string(l));
    }
}

void check_x0(double x0, double lo) {
    if (!(x0 >= lo - kSlack && x0 <= kPi + kSlack)) {
        throw std::domain_error("x0 = " + std::to_string(x0) + " lies outside [" +
                                std::to_string(lo) + ", pi]");
    }
}

} // namespace

double point_max_threshold(double x0, double half_length) {
    check_half_length(half_length);
    check_x0(x0, 0.0);
    if (x0 >= kPi) return std::numeric_limits<double>::infinity();
    return std::max(0.0, (x0 + half_length - kPi) /
                             ((kPi - half_length) * (kPi - x0)));
}

PointMax point_max(const RobinParams& params, double x0, double half_length) {
    check_half_length(half_length);
    check_x0(x0, 0.0);
    const double c = params.c_alpha;
    const double l = half_length;

    const double vertex = x0 * (1.0 - l * c);
    const bool interior = vertex < kPi - l;
    const double center = interior ? vertex : kPi - l;

    double max_value;
    if (interior) {
        max_value = (l / c) * (1.0 - 0.5 * l * c) * (1.0 - x0 * x0 * c * c);
    } else {
        // value of the heated-interval parabola at the rightmost placement
        max_value = -0.5 * (kPi - l) * (kPi - l) + vertex * (kPi - l) -
                    0.5 * x0 * x0 + l / c - 0.5 * l * l;
    }

    double min_value; // leftmost placement, center = -pi + l
    if (x0 > -kPi + 2.0 * l) {
        min_value = l * (((kPi - l) * c - 1.0) * x0 + 1.0 / c + l - kPi);
    } else {
        min_value = -0.5 * x0 * x0 - (kPi - l) * (1.0 - l * c) * x0 - l * l +
                    l * (1.0 / c + kPi) - 0.5 * kPi * kPi;
    }

    return PointMax{point_max_threshold(x0, half_length), center, max_value, min_value};
}

EdgeGap edge_gap(const RobinParams& params, double x0, double half_length) {
    check_half_length(half_length);
    check_x0(x0, -kPi);
    const double c = params.c_alpha;
    const double l = half_length;

    double threshold;
    if (x0 <= kPi - 2.0 * l) {
        threshold = 0.0;
    } else if (x0 >= kPi) {
        threshold = std::numeric_limits<double>::infinity();
    } else {
        threshold = (x0 + 2.0 * l - kPi) / ((kPi - l) * (kPi - x0));
    }

    const double vertex = x0 * (1.0 - l * c) + l * (1.0 - kPi * c);
    const double center = std::min(vertex, kPi - l);
    const double max_gap = -0.5 * center * center + vertex * center -
                           0.5 * x0 * x0 + kPi * l - 0.5 * l * l;
    return EdgeGap{threshold, center, max_gap};
}

double interval_osc(const RobinParams& params, double center, double half_length,
                    double baseline) {
    check_half_length(half_length);
    if (!(baseline >= 0.0)) {
        throw std::domain_error("baseline must be >= 0");
    }
    if (!(center >= -kSlack && center <= kPi - half_length + kSlack)) {
        throw std::domain_error("center = " + std::to_string(center) +
                                " lies outside [0, pi - half_length]");
    }
    const double c = params.c_alpha;
    const double l = half_length;
    const double one_minus_lc = 1.0 - l * c;
    return 0.5 * (one_minus_lc * one_minus_lc / (1.0 + baseline) - 1.0) * center *
               center +
           l * center / (1.0 + params.alpha * kPi) + kPi * l +
           0.5 * kPi * kPi * baseline - 0.5 * l * l;
}

double transition_alpha(double half_length, double baseline) {
    check_half_length(half_length);
    const double l = half_length;
    const double d = baseline;
    if (!((1.0 + d) * l > d * (kPi - l))) {
        throw std::domain_error("the oscillation maximizer is interior for every alpha "
                                "(no transition for half_length = " +
                                std::to_string(l) + ", baseline = " + std::to_string(d) +
                                ")");
    }
    const double num =
        -2.0 * kPi * kPi * d + 3.0 * kPi * d * l - kPi * l + 2.0 * l * l +
        l * std::sqrt((1.0 + d) *
                      (kPi * kPi * d + 9.0 * kPi * kPi - 16.0 * kPi * l + 8.0 * l * l));
    const double den = 2.0 * (kPi * kPi * kPi * d - kPi * kPi * d * l +
                              2.0 * kPi * kPi * l - 3.0 * kPi * l * l + l * l * l);
    return num / den;
}

OscMax osc_max(const RobinParams& params, double half_length, double baseline) {
    check_half_length(half_length);
    if (!(baseline >= 0.0)) {
        throw std::domain_error("baseline must be >= 0");
    }
    const double c = params.c_alpha;
    const double l = half_length;
    const double d = baseline;

    const double free_center =
        (1.0 + d) * l /
        ((1.0 + params.alpha * kPi) * (d + 2.0 * l * c - l * l * c * c));

    const bool has_transition = (1.0 + d) * l > d * (kPi - l);
    std::optional<double> transition;
    if (has_transition) transition = transition_alpha(l, d);
    const double threshold = has_transition ? *transition : 0.0;

    const double center = std::min(free_center, kPi - l);

    double max_osc;
    const double tail = kPi * l + 0.5 * kPi * kPi * d - 0.5 * l * l;
    if (free_center < kPi - l) {
        const double denom =
            (kPi * kPi * d + 2.0 * kPi * l - l * l) * params.alpha * params.alpha +
            2.0 * (kPi * d + l) * params.alpha + d;
        max_osc = 0.5 * (1.0 + d) * l * l / denom + tail;
    } else {
        max_osc = 0.5 * (l * l * c * c - 2.0 * l * c - d) * (kPi - l) * (kPi - l) /
                      (1.0 + d) +
                  l * (kPi - l) / (1.0 + params.alpha * kPi) + tail;
    }

    return OscMax{free_center, transition, threshold, center, max_osc};
}

ExtremalReport max_osc_bound(const RobinParams& params, const SourceClass& cls) {
    const OscMax g = osc_max(params, cls.half_length, cls.baseline);
    return ExtremalReport{(cls.M - cls.m) * g.max_osc,
                          StepSource::class_interval(cls, g.center), std::nullopt,
                          std::nullopt};
}

PointValueBounds point_value_bounds(const RobinParams& params,
                                    const SourceClass& cls, double x0) {
    check_x0(x0, -kPi);
    if (x0 < 0.0) {
        PointValueBounds reflected = point_value_bounds(params, cls, -x0);
        reflected.upper.source = reflected.upper.source.reflected();
        reflected.lower.source = reflected.lower.source.reflected();
        return reflected;
    }

    const double span = cls.M - cls.m;
    const double eta0 = uniform_temperature(params, x0);

    const PointMax up = point_max(params, x0, cls.half_length);
    ExtremalReport upper{eta0 * cls.m + span * up.max_value,
                         StepSource::class_interval(cls, up.center), std::nullopt,
                         std::nullopt};

    // The minimum comes from the complementary problem: heat everything at M
    // and carve out the interval that best heats x0 at the complementary
    // half-length.
    const double l_rest = cls.complement_half_length;
    const PointMax down = point_max(params, x0, l_rest);
    StepSource carved({-kPi, down.center - l_rest, down.center + l_rest, kPi},
                      {cls.M, cls.m, cls.M});
    ExtremalReport lower{eta0 * cls.M - span * down.max_value, std::move(carved),
                         std::nullopt, std::nullopt};

    return PointValueBounds{std::move(upper), std::move(lower)};
}

ExtremalReport edge_gap_bound(const RobinParams& params, const SourceClass& cls,
                              double x0) {
    check_x0(x0, -kPi);
    const EdgeGap eg = edge_gap(params, x0, cls.half_length);
    const double eta_gap =
        uniform_temperature(params, x0) - uniform_temperature(params, -kPi);
    return ExtremalReport{cls.m * eta_gap + (cls.M - cls.m) * eg.max_gap,
                          StepSource::class_interval(cls, eg.center), std::nullopt,
                          std::nullopt};
}

} // namespace robin::extremal
