#pragma once

#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "robin/params.hpp"
#include "robin/source.hpp"

namespace testutil {

using robin::kPi;

// Dense scan of f over [lo, hi]; the independent argmax/max oracle used
// against every closed form.
struct ScanResult {
    double max_value;
    double argmax;
};

inline ScanResult grid_max(const std::function<double(double)>& f, double lo,
                           double hi, std::size_t n) {
    ScanResult best{f(lo), lo};
    for (std::size_t i = 1; i <= n; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
        const double v = f(x);
        if (v > best.max_value) best = {v, x};
    }
    return best;
}

struct Draw {
    std::mt19937_64 rng;

    explicit Draw(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }

    double alpha(double lo = 0.05, double hi = 5.0) { return uniform(lo, hi); }

    robin::SourceClass source_class() {
        const double m = uniform(0.0, 2.0);
        const double span = uniform(0.5, 3.0);
        const double s = m + span * uniform(0.15, 0.85);
        return robin::make_class(m, m + span, s);
    }

    robin::StepSource step_source(std::size_t n_cells, double lo_value,
                                  double hi_value) {
        std::vector<double> bp{-kPi};
        for (std::size_t k = 1; k < n_cells; ++k) bp.push_back(uniform(-kPi, kPi));
        bp.push_back(kPi);
        std::sort(bp.begin(), bp.end());
        std::vector<double> vals(n_cells);
        for (double& v : vals) v = uniform(lo_value, hi_value);
        return robin::StepSource(std::move(bp), std::move(vals));
    }
};

} // namespace testutil
