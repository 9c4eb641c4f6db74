#include <benchmark/benchmark.h>

#include <random>

#include "robin/extremal.hpp"
#include "robin/oracle.hpp"
#include "robin/solver.hpp"

using namespace robin;

namespace {

StepSource random_source(std::size_t n_cells) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> pos(-kPi, kPi);
    std::uniform_real_distribution<double> heat(0.0, 3.0);
    std::vector<double> bp{-kPi, kPi};
    for (std::size_t k = 1; k < n_cells; ++k) bp.push_back(pos(rng));
    std::sort(bp.begin(), bp.end());
    std::vector<double> vals(n_cells);
    for (double& v : vals) v = heat(rng);
    return StepSource(std::move(bp), std::move(vals));
}

void BM_transition_alpha(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(extremal::transition_alpha(kPi / 2.0, 0.0));
    }
}
BENCHMARK(BM_transition_alpha);

void BM_solve_interval(benchmark::State& state) {
    const RobinParams p = make_params(1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_interval(p, 0.4, 1.1));
    }
}
BENCHMARK(BM_solve_interval);

void BM_solve_step(benchmark::State& state) {
    const RobinParams p = make_params(1.0);
    const StepSource f = random_source(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_step(p, f));
    }
}
BENCHMARK(BM_solve_step)->Arg(8)->Arg(64)->Arg(512);

void BM_extrema(benchmark::State& state) {
    const RobinParams p = make_params(1.0);
    const PiecewiseQuadratic u = solve_step(p, random_source(64));
    for (auto _ : state) {
        benchmark::DoNotOptimize(extrema(u));
    }
}
BENCHMARK(BM_extrema);

void BM_osc_max(benchmark::State& state) {
    const RobinParams p = make_params(0.8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(extremal::osc_max(p, 1.2, 0.3));
    }
}
BENCHMARK(BM_osc_max);

void BM_point_bounds(benchmark::State& state) {
    const RobinParams p = make_params(0.8);
    const SourceClass cls = make_class(0.5, 2.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(extremal::point_value_bounds(p, cls, 1.0));
    }
}
BENCHMARK(BM_point_bounds);

void BM_bathtub(benchmark::State& state) {
    const RobinParams p = make_params(1.0);
    const SourceClass cls = make_class(0.0, 1.0, 0.5);
    oracle::OracleConfig cfg;
    cfg.n_cells = static_cast<std::size_t>(state.range(0));
    const auto kernel = oracle::point_kernel(p, 0.7, cfg.n_cells);
    const double closed = extremal::point_value_bounds(p, cls, 0.7).upper.bound;
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::bathtub_max(cls, kernel, cfg, closed, 1.0));
    }
}
BENCHMARK(BM_bathtub)->Arg(2000)->Arg(4000);

void BM_grid_search(benchmark::State& state) {
    const RobinParams p = make_params(1.0);
    const SourceClass cls = make_class(0.0, 1.0, 0.5);
    oracle::OracleConfig cfg;
    cfg.n_grid = static_cast<std::size_t>(state.range(0));
    const double closed = extremal::max_osc_bound(p, cls).bound;
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::grid_search_gap(p, cls, cfg, closed, 1.0));
    }
}
BENCHMARK(BM_grid_search)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
