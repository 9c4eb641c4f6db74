#include "robin/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "robin/green.hpp"
#include "robin/piecewise.hpp"
#include "robin/solver.hpp"

namespace robin::oracle {

namespace {

std::vector<double> uniform_edges(std::size_t n_cells) {
    std::vector<double> edges(n_cells + 1);
    for (std::size_t k = 0; k <= n_cells; ++k) {
        edges[k] = -kPi + 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n_cells);
    }
    edges.front() = -kPi;
    edges.back() = kPi;
    return edges;
}

// Exact integral of G(x0, .) over [lo, hi]: two-point Gauss after splitting
// at the kink y = x0.
double kernel_integral(const RobinParams& params, double x0, double lo, double hi) {
    constexpr double kGaussOffset = 0.28867513459481288225; // 1/(2*sqrt(3))
    const double split = std::clamp(x0, lo, hi);
    const double pieces[2][2] = {{lo, split}, {split, hi}};
    double total = 0.0;
    for (const auto& piece : pieces) {
        const double h = piece[1] - piece[0];
        if (h <= 0.0) continue;
        const double mid = 0.5 * (piece[0] + piece[1]);
        const double node = kGaussOffset * h;
        total += 0.5 * h *
                 (green(params, x0, mid - node) + green(params, x0, mid + node));
    }
    return total;
}

} // namespace

std::vector<double> point_kernel(const RobinParams& params, double x0,
                                 std::size_t n_cells) {
    const auto edges = uniform_edges(n_cells);
    std::vector<double> weights(n_cells);
    for (std::size_t k = 0; k < n_cells; ++k) {
        weights[k] = kernel_integral(params, x0, edges[k], edges[k + 1]) /
                     (edges[k + 1] - edges[k]);
    }
    return weights;
}

std::vector<double> edge_kernel(const RobinParams& params, double x0,
                                std::size_t n_cells) {
    const auto edges = uniform_edges(n_cells);
    std::vector<double> weights(n_cells);
    for (std::size_t k = 0; k < n_cells; ++k) {
        const double width = edges[k + 1] - edges[k];
        weights[k] = (kernel_integral(params, x0, edges[k], edges[k + 1]) -
                      kernel_integral(params, -kPi, edges[k], edges[k + 1])) /
                     width;
    }
    return weights;
}

OracleVerdict bathtub_max(const SourceClass& cls, std::span<const double> kernel,
                          const OracleConfig& cfg, double closed_form, double tol) {
    const std::size_t n = cfg.n_cells;
    if (kernel.size() != n) {
        throw std::invalid_argument("kernel length " + std::to_string(kernel.size()) +
                                    " does not match n_cells " + std::to_string(n));
    }
    const double dx = 2.0 * kPi / static_cast<double>(n);
    double budget = 2.0 * kPi * (cls.s - cls.m); // mass above the ground level
    const double cell_capacity = (cls.M - cls.m) * dx;
    if (budget < -1e-12 || budget > cell_capacity * static_cast<double>(n) + 1e-12) {
        throw std::invalid_argument("mass 2*pi*s is infeasible for the box [m, M]");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return kernel[a] > kernel[b];
    });

    std::vector<double> values(n, cls.m);
    for (std::size_t k : order) {
        if (budget <= 0.0) break;
        const double take = std::min(cell_capacity, budget);
        values[k] = cls.m + take / dx;
        budget -= take;
    }

    double achieved = 0.0;
    for (std::size_t k = 0; k < n; ++k) achieved += kernel[k] * values[k] * dx;

    const double gap = std::abs(closed_form - achieved);
    return OracleVerdict{achieved, closed_form, gap,
                         StepSource(uniform_edges(n), std::move(values)),
                         gap <= tol};
}

OracleVerdict grid_search_gap(const RobinParams& params, const SourceClass& cls,
                              const OracleConfig& cfg, double closed_form,
                              double tol) {
    const std::size_t n = cfg.n_grid;
    if (n < 2) throw std::invalid_argument("n_grid must be at least 2");
    const double span = cls.complement_half_length;

    double best = -std::numeric_limits<double>::infinity();
    double best_center = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
        const double a = span * static_cast<double>(j) / static_cast<double>(n);
        const StepSource f = StepSource::class_interval(cls, a);
        const double osc = extrema(solve_step(params, f)).osc;
        const double osc_reflected = extrema(solve_step(params, f.reflected())).osc;
        const double value = std::max(osc, osc_reflected);
        if (value > best) {
            best = value;
            best_center = a;
        }
    }

    const double gap = std::abs(closed_form - best);
    return OracleVerdict{best, closed_form, gap, best_center, gap <= tol};
}

std::vector<StepSource> random_feasible(const SourceClass& cls,
                                        const OracleConfig& cfg) {
    const std::size_t n = cfg.n_cells;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> box(cls.m, cls.M);

    std::vector<StepSource> sources;
    sources.reserve(cfg.n_samples);
    const auto edges = uniform_edges(n);

    for (std::size_t i = 0; i < cfg.n_samples; ++i) {
        std::vector<double> v(n);
        for (double& x : v) x = box(rng);

        // Recenter to mean s, then shrink deviations just enough to stay in
        // the box; the mean (hence the mass) is exact for any shrink factor.
        const double mean = std::accumulate(v.begin(), v.end(), 0.0) /
                            static_cast<double>(n);
        double up = 0.0;
        double down = 0.0;
        for (double x : v) {
            up = std::max(up, x - mean);
            down = std::max(down, mean - x);
        }
        double t = 1.0;
        if (up > 0.0) t = std::min(t, (cls.M - cls.s) / up);
        if (down > 0.0) t = std::min(t, (cls.s - cls.m) / down);
        for (double& x : v) x = cls.s + t * (x - mean);

        sources.emplace_back(edges, std::move(v));
    }
    return sources;
}

} // namespace robin::oracle
