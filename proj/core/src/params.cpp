#include "robin/params.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace robin {

RobinParams make_params(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0) {
        throw std::invalid_argument("Robin parameter alpha must be finite and > 0, got " +
                                    std::to_string(alpha));
    }
    return RobinParams{alpha, alpha / (1.0 + alpha * kPi)};
}

double default_tolerance() {
    static const double tol = [] {
        if (const char* env = std::getenv("ROBIN_ROD_TOL")) {
            char* end = nullptr;
            const double v = std::strtod(env, &end);
            if (end != env && std::isfinite(v) && v > 0.0) return v;
        }
        return 1e-9;
    }();
    return tol;
}

} // namespace robin
