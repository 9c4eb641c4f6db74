#include "robin/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "robin/green.hpp"

namespace robin {

namespace {

constexpr double kEdgeSlack = 1e-12;

struct Quadratic {
    double q2 = 0.0;
    double q1 = 0.0;
    double q0 = 0.0;
};

// Branches of the unit-interval solution, global coordinates.
Quadratic left_branch(double c, double a, double l) {
    return {0.0, l * (1.0 - a * c), l * (1.0 / c - a)};
}

Quadratic right_branch(double c, double a, double l) {
    return {0.0, -l * (1.0 + a * c), l * (1.0 / c + a)};
}

Quadratic middle_branch(double c, double a, double l) {
    return {-0.5, a * (1.0 - l * c), l / c - 0.5 * (a * a + l * l)};
}

void check_interval(double center, double half_length) {
    if (!(half_length > 0.0 && half_length <= kPi) ||
        center - half_length < -kPi - kEdgeSlack ||
        center + half_length > kPi + kEdgeSlack) {
        throw std::domain_error("heated interval I(" + std::to_string(center) + ", " +
                                std::to_string(half_length) +
                                ") is not contained in [-pi, pi]");
    }
}

} // namespace

PiecewiseQuadratic solve_interval(const RobinParams& params, double center,
                                  double half_length) {
    check_interval(center, half_length);
    const double c = params.c_alpha;
    const double lo = std::max(center - half_length, -kPi);
    const double hi = std::min(center + half_length, kPi);

    std::vector<Segment> segments;
    if (lo > -kPi) {
        const Quadratic q = left_branch(c, center, half_length);
        segments.push_back({-kPi, lo, q.q2, q.q1, q.q0});
    }
    {
        const Quadratic q = middle_branch(c, center, half_length);
        segments.push_back({lo, hi, q.q2, q.q1, q.q0});
    }
    if (hi < kPi) {
        const Quadratic q = right_branch(c, center, half_length);
        segments.push_back({hi, kPi, q.q2, q.q1, q.q0});
    }
    return PiecewiseQuadratic(std::move(segments));
}

PiecewiseQuadratic solve_step(const RobinParams& params, const StepSource& f) {
    const double c = params.c_alpha;
    const auto& bp = f.breakpoints();
    const auto& vals = f.values();

    std::vector<double> cuts(bp);
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Segment> segments;
    segments.reserve(cuts.size() - 1);
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
        const double mid = 0.5 * (cuts[j] + cuts[j + 1]);
        Segment seg{cuts[j], cuts[j + 1], 0.0, 0.0, 0.0};
        for (std::size_t k = 0; k < vals.size(); ++k) {
            const double width = bp[k + 1] - bp[k];
            if (width <= 0.0 || vals[k] == 0.0) continue;
            const double a = 0.5 * (bp[k] + bp[k + 1]);
            const double l = 0.5 * width;
            Quadratic q;
            if (mid <= bp[k]) {
                q = left_branch(c, a, l);
            } else if (mid >= bp[k + 1]) {
                q = right_branch(c, a, l);
            } else {
                q = middle_branch(c, a, l);
            }
            seg.q2 += vals[k] * q.q2;
            seg.q1 += vals[k] * q.q1;
            seg.q0 += vals[k] * q.q0;
        }
        segments.push_back(seg);
    }
    return PiecewiseQuadratic(std::move(segments));
}

PiecewiseQuadratic solve_baseline_interval(const RobinParams& params,
                                           const IntervalSource& j) {
    return solve_step(params, j.to_step());
}

double solve_quadrature(const RobinParams& params, const StepSource& f, double x) {
    if (!(x >= -kPi - kEdgeSlack && x <= kPi + kEdgeSlack)) {
        throw std::domain_error("x = " + std::to_string(x) + " lies outside [-pi, pi]");
    }
    x = std::clamp(x, -kPi, kPi);

    // Two-point Gauss is exact through cubics; the integrand is linear in y
    // on each piece once split at the kink y = x.
    constexpr double kGaussOffset = 0.28867513459481288225; // 1/(2*sqrt(3))
    const auto& bp = f.breakpoints();
    const auto& vals = f.values();

    double total = 0.0;
    for (std::size_t k = 0; k < vals.size(); ++k) {
        if (vals[k] == 0.0) continue;
        const double split = std::clamp(x, bp[k], bp[k + 1]);
        const double pieces[2][2] = {{bp[k], split}, {split, bp[k + 1]}};
        for (const auto& piece : pieces) {
            const double h = piece[1] - piece[0];
            if (h <= 0.0) continue;
            const double mid = 0.5 * (piece[0] + piece[1]);
            const double node = kGaussOffset * h;
            total += 0.5 * h * vals[k] *
                     (green(params, x, mid - node) + green(params, x, mid + node));
        }
    }
    return total;
}

} // namespace robin
