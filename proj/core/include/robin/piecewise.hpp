#pragma once

#include <utility>
#include <vector>

#include "robin/params.hpp"

namespace robin {

// One polynomial piece q2*x^2 + q1*x + q0 on [lo, hi], global coordinates.
struct Segment {
    double lo;
    double hi;
    double q2;
    double q1;
    double q0;

    double value(double x) const { return (q2 * x + q1) * x + q0; }
    double slope(double x) const { return 2.0 * q2 * x + q1; }
};

// A function on [-pi, pi] made of contiguous at-most-quadratic segments.
// Solutions of the Robin problem for step sources are of this form and are
// C^1 across every internal breakpoint.
class PiecewiseQuadratic {
  public:
    explicit PiecewiseQuadratic(std::vector<Segment> segments);

    const std::vector<Segment>& segments() const { return segments_; }

    double value(double x) const;
    double slope(double x) const;

    PiecewiseQuadratic scaled(double factor) const;

  private:
    const Segment& segment_at(double x) const;

    std::vector<Segment> segments_;
};

struct Extrema {
    double min_value;
    double argmin;
    double max_value;
    double argmax;
    double osc; // max_value - min_value
};

// Exact extrema from segment endpoints and interior vertices.
// Ties: the leftmost minimizer wins; a flat top reports its midpoint.
Extrema extrema(const PiecewiseQuadratic& u);

// (-u'(-pi) + alpha*u(-pi), u'(pi) + alpha*u(pi)); both vanish for any
// solution of the Robin problem.
std::pair<double, double> boundary_residuals(const PiecewiseQuadratic& u,
                                             const RobinParams& params);

} // namespace robin
