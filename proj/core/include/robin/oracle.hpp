#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "robin/params.hpp"
#include "robin/source.hpp"

namespace robin::oracle {

struct OracleConfig {
    std::size_t n_cells = 2000;  // discretization of [-pi, pi]
    std::size_t n_grid = 10000;  // scan resolution for interval centers
    std::size_t n_samples = 100; // random feasible sources
    std::uint64_t seed = 0;
};

struct OracleVerdict {
    double oracle_value;
    double closed_form_value;
    double abs_gap;
    std::variant<double, StepSource> argmax; // best center or best source
    bool pass;
};

// Exact per-cell averages of G(x0, .) over n_cells uniform cells.
std::vector<double> point_kernel(const RobinParams& params, double x0,
                                 std::size_t n_cells);
// Exact per-cell averages of G(x0, .) - G(-pi, .).
std::vector<double> edge_kernel(const RobinParams& params, double x0,
                                std::size_t n_cells);

// Maximizes sum_k w_k f_k dx over cell values m <= f_k <= M with total mass
// 2*pi*s: cells are raised to M in decreasing kernel order, with at most one
// fractionally filled cell (ties broken toward the lower index). The verdict
// compares the achieved value against `closed_form` at tolerance `tol`.
// Throws std::invalid_argument if kernel.size() != cfg.n_cells or the mass
// constraint is infeasible for the box.
OracleVerdict bathtub_max(const SourceClass& cls, std::span<const double> kernel,
                          const OracleConfig& cfg, double closed_form,
                          double tol);

// Scans interval centers over [0, pi - l] (and their reflections), computes
// each oscillation through the exact solver, and compares the best value
// against `closed_form` at tolerance `tol`.
OracleVerdict grid_search_gap(const RobinParams& params, const SourceClass& cls,
                              const OracleConfig& cfg, double closed_form,
                              double tol);

// Deterministic random members of the class on cfg.n_cells uniform cells:
// uniform draws recentered to mean s with deviations shrunk to fit [m, M],
// so the mass constraint holds exactly.
std::vector<StepSource> random_feasible(const SourceClass& cls,
                                        const OracleConfig& cfg);

} // namespace robin::oracle
