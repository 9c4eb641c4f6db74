#pragma once

#include <numbers>

namespace robin {

inline constexpr double kPi = std::numbers::pi;

// Robin parameter alpha and the derived kernel constant c_alpha = alpha/(1+alpha*pi).
// c_alpha always lies in (0, 1/pi).
struct RobinParams {
    double alpha;
    double c_alpha;
};

// Throws std::invalid_argument unless alpha is finite and > 0.
RobinParams make_params(double alpha);

// Absolute comparison tolerance used where no tighter one is specified.
// Defaults to 1e-9; the ROBIN_ROD_TOL environment variable overrides it.
double default_tolerance();

} // namespace robin
