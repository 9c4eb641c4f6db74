#pragma once

#include "robin/params.hpp"

namespace robin {

// Green's kernel of the Robin problem on [-pi, pi]:
//   G(x, y) = -c_alpha*x*y/2 - |x - y|/2 + 1/(2 c_alpha).
// Strictly positive on the whole square and symmetric in (x, y).
// Throws std::domain_error if x or y is outside [-pi, pi].
double green(const RobinParams& params, double x, double y);

// Temperature profile when the whole rod carries unit heat density:
//   -x^2/2 + pi/alpha + pi^2/2.
// Throws std::domain_error if x is outside [-pi, pi].
double uniform_temperature(const RobinParams& params, double x);

} // namespace robin
