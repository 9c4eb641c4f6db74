#include "robin/green.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace robin {

namespace {

// Absorbs one-ulp overshoot from grid arithmetic; anything farther out is a
// genuine domain violation.
constexpr double kDomainSlack = 1e-12;

double checked(double x, const char* name) {
    if (!(std::abs(x) <= kPi + kDomainSlack)) {
        throw std::domain_error(std::string(name) + " = " + std::to_string(x) +
                                " lies outside [-pi, pi]");
    }
    return std::clamp(x, -kPi, kPi);
}

} // namespace

double green(const RobinParams& params, double x, double y) {
    x = checked(x, "x");
    y = checked(y, "y");
    return -0.5 * params.c_alpha * x * y - 0.5 * std::abs(x - y) +
           0.5 / params.c_alpha;
}

double uniform_temperature(const RobinParams& params, double x) {
    x = checked(x, "x");
    return -0.5 * x * x + kPi / params.alpha + 0.5 * kPi * kPi;
}

} // namespace robin
