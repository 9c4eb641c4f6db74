#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "helpers.hpp"
#include "robin/green.hpp"
#include "robin/solver.hpp"

using Catch::Approx;
using namespace robin;

TEST_CASE("quadrature of the unit source reproduces the uniform profile",
          "[quadrature]") {
    const RobinParams p = make_params(1.0);
    CHECK(solve_quadrature(p, StepSource::constant(1.0), 0.0) ==
          Approx(uniform_temperature(p, 0.0)).margin(1e-12));
}

TEST_CASE("quadrature of the zero source vanishes everywhere", "[quadrature]") {
    const RobinParams p = make_params(0.7);
    const StepSource zero = StepSource::constant(0.0, 4);
    for (int i = 0; i <= 20; ++i) {
        const double x = -kPi + 2.0 * kPi * i / 20.0;
        CHECK(solve_quadrature(p, zero, x) == 0.0);
    }
}

TEST_CASE("quadrature matches the closed-form half-rod value", "[quadrature]") {
    const RobinParams p = make_params(1.0);
    const StepSource half({-kPi, 0.0, kPi}, {0.0, 1.0});
    // closed form for x left of the heated interval I(pi/2, pi/2)
    const double a = kPi / 2.0;
    const double l = kPi / 2.0;
    const double expected =
        l * ((1.0 - a * p.c_alpha) * -kPi + (1.0 / p.c_alpha - a));
    CHECK(solve_quadrature(p, half, -kPi) == Approx(expected).margin(1e-12));
}

TEST_CASE("quadrature rejects out-of-rod evaluation points", "[quadrature]") {
    const RobinParams p = make_params(1.0);
    CHECK_THROWS_AS(solve_quadrature(p, StepSource::constant(1.0), 2.0 * kPi),
                    std::domain_error);
}
