#pragma once

#include "robin/params.hpp"
#include "robin/piecewise.hpp"
#include "robin/source.hpp"

namespace robin {

// Exact temperature for the unit source on I(center, half_length):
// a rising linear piece, a concave parabola over the heated interval, and a
// falling linear piece (outer pieces drop out when the interval touches an
// end of the rod). Requires 0 < half_length <= pi and the interval inside
// [-pi, pi]; throws std::domain_error otherwise.
PiecewiseQuadratic solve_interval(const RobinParams& params, double center,
                                  double half_length);

// Exact temperature for a step source: the solution map is linear in the
// source, so this is the cell-by-cell sum of interval solutions merged on
// the union of breakpoints.
PiecewiseQuadratic solve_step(const RobinParams& params, const StepSource& f);

// Temperature for baseline + chi_{I}: baseline * uniform profile plus the
// interval solution.
PiecewiseQuadratic solve_baseline_interval(const RobinParams& params,
                                           const IntervalSource& j);

// Independent slow path: integrates G(x, .) f numerically, splitting at every
// cell breakpoint and at the kernel kink y = x, then applying a two-point
// Gauss rule per piece. The integrand is piecewise linear in y, so the result
// is exact up to rounding. Throws std::domain_error for x outside [-pi, pi].
double solve_quadrature(const RobinParams& params, const StepSource& f,
                        double x);

} // namespace robin
