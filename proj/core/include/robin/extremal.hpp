#pragma once

#include <optional>

#include "robin/params.hpp"
#include "robin/source.hpp"

namespace robin::extremal {

// ---------------------------------------------------------------------------
// Heating a fixed spot x0 with a single unit interval of half-length l.
// F(a) = temperature at x0 when I(a, l) is heated; F is concave and unimodal
// in the center a over [-pi+l, pi-l].
// ---------------------------------------------------------------------------

struct PointMax {
    double threshold_alpha; // below it the best interval hugs the right end
    double center;          // maximizing interval center
    double max_value;       // temperature at x0 for the best placement
    double min_value;       // temperature at x0 for the worst placement (left end)
};

// Robin-parameter threshold separating the pinned-to-the-edge regime from the
// interior-optimum regime. Zero when x0 + l <= pi (the interior formula always
// applies); +infinity when x0 == pi (the edge regime always applies).
double point_max_threshold(double x0, double half_length);

// Requires x0 in [0, pi] and half_length in (0, pi).
PointMax point_max(const RobinParams& params, double x0, double half_length);

// ---------------------------------------------------------------------------
// Gap between a fixed spot and the left edge for a single unit interval:
// E(a) = u(x0) - u(-pi).
// ---------------------------------------------------------------------------

struct EdgeGap {
    double threshold_alpha; // below it the best interval hugs the right end
    double center;          // maximizing interval center
    double max_gap;         // E at the best placement
};

// Requires x0 in [-pi, pi] and half_length in (0, pi).
EdgeGap edge_gap(const RobinParams& params, double x0, double half_length);

// ---------------------------------------------------------------------------
// Temperature gap (oscillation) for the source baseline + chi_{I(center, l)}.
// ---------------------------------------------------------------------------

// Closed-form oscillation as a concave quadratic in `center` on [0, pi - l].
// It equals the solver's oscillation as long as the hot spot stays inside the
// heated interval, i.e. center <= l*(1+baseline)/(baseline + l*c_alpha); this
// holds for every center when baseline == 0 and always at the maximizer, but
// for strongly heated baselines and far-right centers the rod's middle gets
// hotter than the interval and this formula under-reports the gap.
// Requires 0 <= center <= pi - half_length.
double interval_osc(const RobinParams& params, double center,
                    double half_length, double baseline);

// The Robin parameter at which the unconstrained maximizer of the oscillation
// enters [0, pi - l]. Exists only when (1+baseline)*l > baseline*(pi-l);
// throws std::domain_error otherwise (the maximizer is interior for every
// alpha in that case).
double transition_alpha(double half_length, double baseline);

struct OscMax {
    double free_center;                     // vertex of the oscillation quadratic
    std::optional<double> transition;       // alpha where free_center == pi - l
    double threshold_alpha;                 // 0 when no transition exists
    double center;                          // min(free_center, pi - l)
    double max_osc;                         // oscillation at `center`
};

OscMax osc_max(const RobinParams& params, double half_length, double baseline);

// ---------------------------------------------------------------------------
// Sharp bounds over a whole source class, with the bang-bang sources that
// attain them.
// ---------------------------------------------------------------------------

struct ExtremalReport {
    double bound;
    StepSource source;
    std::optional<double> oracle_estimate;
    std::optional<double> gap_to_oracle;
};

// Sharp upper bound on the temperature gap over the class; attained exactly by
// the reported source (and its reflection).
ExtremalReport max_osc_bound(const RobinParams& params, const SourceClass& cls);

struct PointValueBounds {
    ExtremalReport upper;
    ExtremalReport lower;
};

// Sharp two-sided bounds on the temperature at x0 over the class. x0 < 0 is
// handled by reflection and the reported sources are reflected back.
PointValueBounds point_value_bounds(const RobinParams& params,
                                    const SourceClass& cls, double x0);

// Sharp upper bound on u(x0) - u(-pi) over the class.
ExtremalReport edge_gap_bound(const RobinParams& params, const SourceClass& cls,
                              double x0);

} // namespace robin::extremal
