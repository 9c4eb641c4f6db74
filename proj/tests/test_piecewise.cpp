#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "helpers.hpp"
#include "robin/green.hpp"
#include "robin/solver.hpp"

using Catch::Approx;
using namespace robin;

TEST_CASE("extrema of the uniform profile", "[piecewise]") {
    const RobinParams p = make_params(1.0);
    const Extrema e = extrema(solve_interval(p, 0.0, kPi));
    CHECK(e.max_value == Approx(kPi + kPi * kPi / 2.0).margin(1e-12));
    CHECK(e.argmax == Approx(0.0).margin(1e-12));
    CHECK(e.min_value == Approx(kPi).margin(1e-12));
    CHECK(e.argmin == -kPi); // tie with +pi resolves to the left end
    CHECK(e.osc == Approx(kPi * kPi / 2.0).margin(1e-12));
}

TEST_CASE("argmax of an interval solution sits at the damped center",
          "[piecewise]") {
    const RobinParams p = make_params(1.0);
    const double a = 0.5;
    const double l = 0.5;
    const PiecewiseQuadratic u = solve_interval(p, a, l);
    const Extrema e = extrema(u);
    CHECK(e.argmax == Approx(a * (1.0 - l * p.c_alpha)).margin(1e-12));

    // independent dense scan
    const auto scan = testutil::grid_max([&](double x) { return u.value(x); },
                                         -kPi, kPi, 100000);
    CHECK(e.max_value == Approx(scan.max_value).margin(1e-9));
    CHECK(e.argmax == Approx(scan.argmax).margin(1e-4));
    CHECK(e.argmin == -kPi);
}

TEST_CASE("a single linear segment peaks at its endpoints", "[piecewise]") {
    const PiecewiseQuadratic line({Segment{-kPi, kPi, 0.0, 2.0, 1.0}});
    const Extrema e = extrema(line);
    CHECK(e.argmin == -kPi);
    CHECK(e.argmax == kPi);
    CHECK(e.min_value == Approx(1.0 - 2.0 * kPi));
    CHECK(e.max_value == Approx(1.0 + 2.0 * kPi));
}

TEST_CASE("the zero solution reports a centered plateau", "[piecewise]") {
    const RobinParams p = make_params(1.0);
    const Extrema e = extrema(solve_step(p, StepSource::constant(0.0, 3)));
    CHECK(e.osc == 0.0);
    CHECK(e.argmax == Approx(0.0).margin(1e-15));
    CHECK(e.argmin == -kPi);
}

TEST_CASE("a flat top between symmetric sources reports its midpoint",
          "[piecewise]") {
    const RobinParams p = make_params(1.0);
    // no heat in the middle third: the temperature is exactly linear there,
    // and by symmetry exactly flat
    const StepSource f({-kPi, -1.0, 1.0, kPi}, {1.0, 0.0, 1.0});
    const Extrema e = extrema(solve_step(p, f));
    CHECK(e.argmax == Approx(0.0).margin(1e-15));
    CHECK(e.argmin == -kPi);
}

TEST_CASE("convex handcrafted segments still report exact extrema",
          "[piecewise]") {
    const PiecewiseQuadratic bowl({Segment{-kPi, kPi, 1.0, 0.0, 0.0}});
    const Extrema e = extrema(bowl);
    CHECK(e.min_value == 0.0);
    CHECK(e.argmin == 0.0);
    CHECK(e.max_value == Approx(kPi * kPi));
    CHECK(e.argmax == -kPi); // tie between the ends resolves left
}

TEST_CASE("piecewise validation rejects gaps and bad covers", "[piecewise]") {
    CHECK_THROWS_AS(PiecewiseQuadratic({}), std::invalid_argument);
    CHECK_THROWS_AS(PiecewiseQuadratic({Segment{-1.0, kPi, 0, 0, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PiecewiseQuadratic({Segment{-kPi, 0.0, 0, 0, 0},
                                        Segment{0.5, kPi, 0, 0, 0}}),
                    std::invalid_argument);
}

TEST_CASE("boundary residuals vanish identically for the uniform profile",
          "[piecewise]") {
    const RobinParams p = make_params(2.5);
    const auto [left, right] = boundary_residuals(solve_interval(p, 0.0, kPi), p);
    CHECK(std::abs(left) <= 1e-12);
    CHECK(std::abs(right) <= 1e-12);
}

TEST_CASE("evaluation outside the rod is refused", "[piecewise]") {
    const RobinParams p = make_params(1.0);
    const PiecewiseQuadratic u = solve_interval(p, 0.0, 1.0);
    CHECK_THROWS_AS(u.value(3.5), std::domain_error);
}
