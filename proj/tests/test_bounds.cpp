#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "helpers.hpp"
#include "robin/extremal.hpp"
#include "robin/green.hpp"
#include "robin/oracle.hpp"
#include "robin/solver.hpp"

using Catch::Approx;
using namespace robin;
namespace ext = robin::extremal;

namespace {

double osc_of(const RobinParams& p, const StepSource& f) {
    return extrema(solve_step(p, f)).osc;
}

// Moves a parcel of mass from inside the donor window to inside the receiver
// window, staying inside the class box. The windows must be cells of f.
StepSource shift_mass(const StepSource& f, double donor_lo, double donor_hi,
                      double receiver_lo, double receiver_hi, double amount) {
    std::vector<double> cuts = f.breakpoints();
    for (double c : {donor_lo, donor_hi, receiver_lo, receiver_hi}) {
        cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<double> vals;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
        double v = f.value_at(mid);
        if (mid > donor_lo && mid < donor_hi) v -= amount / (donor_hi - donor_lo);
        if (mid > receiver_lo && mid < receiver_hi) {
            v += amount / (receiver_hi - receiver_lo);
        }
        vals.push_back(v);
    }
    return StepSource(std::move(cuts), std::move(vals));
}

} // namespace

TEST_CASE("gap bound: the reported source attains the bound exactly",
          "[extremal][bounds]") {
    testutil::Draw draw(97);
    for (int i = 0; i < 40; ++i) {
        const RobinParams p = make_params(draw.alpha());
        const SourceClass cls = draw.source_class();
        const auto report = ext::max_osc_bound(p, cls);
        REQUIRE(report.source.in_class(cls));
        CHECK(std::abs(osc_of(p, report.source) - report.bound) <= 1e-10);
        // reflected extremal source does equally well
        CHECK(std::abs(osc_of(p, report.source.reflected()) - report.bound) <= 1e-10);
    }
}

TEST_CASE("gap bound: slow cooling pins the heated set to a half rod",
          "[extremal][bounds]") {
    const SourceClass cls = make_class(0.0, 1.0, 0.5);
    const double transition = ext::transition_alpha(cls.half_length, cls.baseline);
    for (double alpha : {0.1, 0.3, transition}) {
        const auto report = ext::max_osc_bound(make_params(alpha), cls);
        const auto& bp = report.source.breakpoints();
        CHECK(bp[1] == Approx(0.0).margin(1e-9));  // heated set [0, pi]
        CHECK(bp[2] == Approx(kPi).margin(1e-9));
    }
}

TEST_CASE("gap bound reproduces the figure-1 class", "[extremal][bounds]") {
    const RobinParams p = make_params(0.5);
    const SourceClass cls = make_class(1.0, 3.0, 1.4);
    CHECK(cls.half_length == Approx(kPi / 5.0).margin(1e-14));
    CHECK(cls.baseline == Approx(0.5).margin(1e-15));
    const auto report = ext::max_osc_bound(p, cls);
    CHECK(report.bound == Approx(8.610690413794122).margin(1e-11));

    // independent dense scan over placements
    const auto scan = testutil::grid_max(
        [&](double a) {
            return osc_of(p, StepSource::class_interval(cls, a));
        },
        0.0, cls.complement_half_length, 20000);
    CHECK(report.bound == Approx(scan.max_value).margin(1e-7));
}

TEST_CASE("point bounds: the reported sources attain their bounds",
          "[extremal][bounds]") {
    testutil::Draw draw(101);
    for (int i = 0; i < 40; ++i) {
        const RobinParams p = make_params(draw.alpha());
        const SourceClass cls = draw.source_class();
        const double x0 = draw.uniform(0.0, kPi);
        const auto bounds = ext::point_value_bounds(p, cls, x0);
        REQUIRE(bounds.upper.source.in_class(cls));
        REQUIRE(bounds.lower.source.in_class(cls));
        CHECK(std::abs(solve_step(p, bounds.upper.source).value(x0) -
                       bounds.upper.bound) <= 1e-10);
        CHECK(std::abs(solve_step(p, bounds.lower.source).value(x0) -
                       bounds.lower.bound) <= 1e-10);
        CHECK(bounds.lower.bound <= bounds.upper.bound + 1e-12);
    }
}

TEST_CASE("point bounds: the constant member sits strictly inside",
          "[extremal][bounds]") {
    const RobinParams p = make_params(1.0);
    const SourceClass cls = make_class(0.5, 2.0, 1.0);
    const double x0 = 1.2;
    const auto bounds = ext::point_value_bounds(p, cls, x0);
    const double flat = cls.s * uniform_temperature(p, x0);
    CHECK(flat > bounds.lower.bound + 1e-6);
    CHECK(flat < bounds.upper.bound - 1e-6);
}

TEST_CASE("point bounds: centered-spot upper bound for the unit class",
          "[extremal][bounds]") {
    const RobinParams p = make_params(1.0);
    const SourceClass cls = make_class(0.0, 1.0, 0.5);
    const auto bounds = ext::point_value_bounds(p, cls, 0.0);
    // equals the best half-rod interval value at the center
    CHECK(bounds.upper.bound == Approx(5.271897977203406).margin(1e-11));
    CHECK(bounds.upper.bound ==
          Approx(solve_interval(p, 0.0, kPi / 2.0).value(0.0)).margin(1e-12));
}

TEST_CASE("point bounds respect the complementary-class identity",
          "[extremal][bounds]") {
    testutil::Draw draw(103);
    for (int i = 0; i < 25; ++i) {
        const RobinParams p = make_params(draw.alpha());
        const SourceClass cls = draw.source_class();
        const double x0 = draw.uniform(0.0, kPi);
        const SourceClass dual = make_class(cls.m, cls.M, cls.M + cls.m - cls.s);
        const double upper = ext::point_value_bounds(p, cls, x0).upper.bound;
        const double lower = ext::point_value_bounds(p, dual, x0).lower.bound;
        CHECK(upper + lower ==
              Approx((cls.M + cls.m) * uniform_temperature(p, x0)).margin(1e-9));
    }
}

TEST_CASE("point bounds reflect negative spots", "[extremal][bounds]") {
    const RobinParams p = make_params(0.7);
    const SourceClass cls = make_class(0.2, 1.5, 0.8);
    const double x0 = -1.1;
    const auto bounds = ext::point_value_bounds(p, cls, x0);
    const auto mirrored = ext::point_value_bounds(p, cls, -x0);
    CHECK(bounds.upper.bound == Approx(mirrored.upper.bound).margin(1e-12));
    CHECK(bounds.lower.bound == Approx(mirrored.lower.bound).margin(1e-12));
    CHECK(std::abs(solve_step(p, bounds.upper.source).value(x0) -
                   bounds.upper.bound) <= 1e-10);
    CHECK(std::abs(solve_step(p, bounds.lower.source).value(x0) -
                   bounds.lower.bound) <= 1e-10);
}

TEST_CASE("edge bound: the reported source attains the bound",
          "[extremal][bounds]") {
    testutil::Draw draw(107);
    for (int i = 0; i < 40; ++i) {
        const RobinParams p = make_params(draw.alpha());
        const SourceClass cls = draw.source_class();
        const double x0 = draw.uniform(-kPi, kPi);
        const auto report = ext::edge_gap_bound(p, cls, x0);
        REQUIRE(report.source.in_class(cls));
        const auto u = solve_step(p, report.source);
        CHECK(std::abs(u.value(x0) - u.value(-kPi) - report.bound) <= 1e-10);
    }
}

TEST_CASE("edge bound at the left end drops the uniform part",
          "[extremal][bounds]") {
    const RobinParams p = make_params(1.3);
    const SourceClass cls = make_class(0.4, 2.0, 1.0);
    const auto report = ext::edge_gap_bound(p, cls, -kPi);
    const auto eg = ext::edge_gap(p, -kPi, cls.half_length);
    CHECK(report.bound == Approx((cls.M - cls.m) * eg.max_gap).margin(1e-12));
}

TEST_CASE("edge bound for the quarter class at the three-quarter spot",
          "[extremal][bounds]") {
    const RobinParams p = make_params(1.0);
    const SourceClass cls = make_class(0.0, 1.0, 0.25); // half-length pi/4
    REQUIRE(cls.half_length == Approx(kPi / 4.0).margin(1e-14));
    const auto report = ext::edge_gap_bound(p, cls, kPi / 2.0);
    CHECK(report.bound == Approx(1.994805126397028).margin(1e-11));
}

TEST_CASE("edge bound dominates random class members", "[extremal][bounds]") {
    const RobinParams p = make_params(1.0);
    const SourceClass cls = make_class(0.0, 1.0, 0.25);
    const double x0 = kPi / 2.0;
    const auto report = ext::edge_gap_bound(p, cls, x0);
    oracle::OracleConfig cfg;
    cfg.n_cells = 40;
    cfg.n_samples = 100;
    cfg.seed = 7;
    for (const auto& f : oracle::random_feasible(cls, cfg)) {
        const auto u = solve_step(p, f);
        CHECK(u.value(x0) - u.value(-kPi) <= report.bound + 1e-9);
    }
}

TEST_CASE("shifting mass off any extremal source strictly hurts",
          "[extremal][bounds]") {
    const RobinParams p = make_params(0.9);
    const SourceClass cls = make_class(0.5, 2.0, 1.0);
    const double parcel = 0.02;

    SECTION("gap objective") {
        const auto report = ext::max_osc_bound(p, cls);
        const auto& bp = report.source.breakpoints();
        // donate from the middle of the hot interval, deposit into cold land
        const StepSource perturbed =
            shift_mass(report.source, 0.5 * (bp[1] + bp[2]) - 0.1,
                       0.5 * (bp[1] + bp[2]) + 0.1, bp[0] + 0.1, bp[0] + 0.3, parcel);
        REQUIRE(perturbed.in_class(cls));
        CHECK(osc_of(p, perturbed) < report.bound - 1e-9);
    }

    SECTION("point objective") {
        const double x0 = 1.0;
        const auto bounds = ext::point_value_bounds(p, cls, x0);
        const auto& bp = bounds.upper.source.breakpoints();
        const StepSource perturbed =
            shift_mass(bounds.upper.source, 0.5 * (bp[1] + bp[2]) - 0.1,
                       0.5 * (bp[1] + bp[2]) + 0.1, bp[0] + 0.1, bp[0] + 0.3, parcel);
        REQUIRE(perturbed.in_class(cls));
        CHECK(solve_step(p, perturbed).value(x0) < bounds.upper.bound - 1e-9);
    }

    SECTION("edge objective") {
        const double x0 = 2.0;
        const auto report = ext::edge_gap_bound(p, cls, x0);
        const auto& bp = report.source.breakpoints();
        const StepSource perturbed =
            shift_mass(report.source, 0.5 * (bp[1] + bp[2]) - 0.1,
                       0.5 * (bp[1] + bp[2]) + 0.1, bp[0] + 0.1, bp[0] + 0.3, parcel);
        REQUIRE(perturbed.in_class(cls));
        const auto u = solve_step(p, perturbed);
        CHECK(u.value(x0) - u.value(-kPi) < report.bound - 1e-9);
    }
}
