#include "robin/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "robin/piecewise.hpp"
#include "robin/solver.hpp"

namespace robin::oracle {

namespace {

// One sample grid shared by every n, so a coarse cell always samples a
// superset of its subcells' nodes and refined minima can only rise.
constexpr std::size_t kSampleGrid = 8192;

double node(std::size_t j) {
    return -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(kSampleGrid);
}

} // namespace

StepSource approx_step(const std::function<double(double)>& f, std::size_t n) {
    if (n < 1 || n > kSampleGrid / 2) {
        throw std::invalid_argument("approx_step cell count must be in [1, " +
                                    std::to_string(kSampleGrid / 2) + "]");
    }
    std::vector<double> edges(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        edges[k] = -kPi + 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    }
    edges.front() = -kPi;
    edges.back() = kPi;

    std::vector<double> values(n);
    std::size_t j = 0;
    for (std::size_t k = 0; k < n; ++k) {
        double low = std::numeric_limits<double>::infinity();
        const bool last = (k + 1 == n);
        while (j <= kSampleGrid && (last ? true : node(j) < edges[k + 1])) {
            low = std::min(low, f(node(j)));
            ++j;
        }
        if (!std::isfinite(low)) low = f(0.5 * (edges[k] + edges[k + 1]));
        values[k] = low;
    }
    return StepSource(std::move(edges), std::move(values));
}

double l1_distance(const StepSource& a, const StepSource& b) {
    std::vector<double> cuts;
    cuts.reserve(a.breakpoints().size() + b.breakpoints().size());
    cuts.insert(cuts.end(), a.breakpoints().begin(), a.breakpoints().end());
    cuts.insert(cuts.end(), b.breakpoints().begin(), b.breakpoints().end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double total = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double width = cuts[k + 1] - cuts[k];
        if (width <= 0.0) continue;
        const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
        total += std::abs(a.value_at(mid) - b.value_at(mid)) * width;
    }
    return total;
}

std::vector<ConvergenceRow>
convergence_report(const RobinParams& params,
                   const std::function<double(double)>& f,
                   std::span<const std::size_t> n_list) {
    if (n_list.empty()) {
        throw std::invalid_argument("convergence_report needs at least one n");
    }
    for (std::size_t i = 1; i < n_list.size(); ++i) {
        if (n_list[i] <= n_list[i - 1]) {
            throw std::invalid_argument("n_list must be strictly increasing");
        }
    }

    const StepSource f_ref = approx_step(f, 2 * n_list.back());
    const PiecewiseQuadratic u_ref = solve_step(params, f_ref);
    const double osc_ref = extrema(u_ref).osc;
    const double max_green = 0.5 / params.c_alpha; // attained on the diagonal at 0

    constexpr std::size_t kProbes = 1000;
    std::vector<ConvergenceRow> rows;
    rows.reserve(n_list.size());
    for (std::size_t n : n_list) {
        const StepSource f_n = approx_step(f, n);
        const PiecewiseQuadratic u_n = solve_step(params, f_n);

        double sup = 0.0;
        for (std::size_t i = 0; i <= kProbes; ++i) {
            const double x =
                -kPi + 2.0 * kPi * static_cast<double>(i) / static_cast<double>(kProbes);
            sup = std::max(sup, std::abs(u_n.value(x) - u_ref.value(x)));
        }

        const double l1 = l1_distance(f_n, f_ref);
        rows.push_back(ConvergenceRow{n, sup, std::abs(extrema(u_n).osc - osc_ref),
                                      l1, max_green * l1});
    }
    return rows;
}

} // namespace robin::oracle
