#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "robin/params.hpp"

namespace robin::figures {

struct XY {
    double x;
    double y;
};

// Maximal temperature gap over the class as a function of alpha on
// (0, alpha_max], sampled at n_points.
std::vector<XY> max_gap_vs_alpha(double m, double M, double s,
                                 std::size_t n_points = 400,
                                 double alpha_max = 2.0);

// Temperature profile of the gap-maximizing source for the class.
std::vector<XY> extremal_profile(const RobinParams& params, double m, double M,
                                 double s, std::size_t n_points = 800);

struct OscCurvePoint {
    double alpha;
    double center;
    double value;
};

// Families of oscillation-vs-center curves, one per alpha.
std::vector<OscCurvePoint> osc_curves(double half_length, double baseline,
                                      std::span<const double> alphas,
                                      std::size_t n_points = 400);

} // namespace robin::figures
