#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "robin/params.hpp"
#include "robin/source.hpp"

namespace robin::oracle {

// Step under-approximation of an evaluable source: n equal cells, each taking
// the minimum of f over the sample nodes falling in it. Nodes come from one
// fixed 8192-point grid shared by every n, so refining n to 2n, 4n, ... can
// only raise cell values. The minimum is sampled, not exact, for sources that
// dip between nodes. Requires 1 <= n <= 4096.
StepSource approx_step(const std::function<double(double)>& f, std::size_t n);

// Exact L1 distance between two step sources (integrated over the breakpoint
// union).
double l1_distance(const StepSource& a, const StepSource& b);

struct ConvergenceRow {
    std::size_t n;
    double sup_norm; // sampled sup |u_n - u_ref|
    double osc_diff; // |osc(u_n) - osc(u_ref)|
    double l1_dist;  // ||f_n - f_ref||_1, exact
    double envelope; // max G * l1_dist, a guaranteed bound on sup_norm
};

// Convergence of step-approximant temperatures toward the reference computed
// at twice the finest requested n. n_list must be increasing.
std::vector<ConvergenceRow>
convergence_report(const RobinParams& params,
                   const std::function<double(double)>& f,
                   std::span<const std::size_t> n_list);

} // namespace robin::oracle
