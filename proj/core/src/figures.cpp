#include "robin/figures.hpp"

#include <stdexcept>

#include "robin/extremal.hpp"
#include "robin/piecewise.hpp"
#include "robin/solver.hpp"

namespace robin::figures {

std::vector<XY> max_gap_vs_alpha(double m, double M, double s,
                                 std::size_t n_points, double alpha_max) {
    if (n_points < 2 || !(alpha_max > 0.0)) {
        throw std::invalid_argument("need n_points >= 2 and alpha_max > 0");
    }
    const SourceClass cls = make_class(m, M, s);
    std::vector<XY> rows;
    rows.reserve(n_points);
    for (std::size_t i = 1; i <= n_points; ++i) {
        const double alpha =
            alpha_max * static_cast<double>(i) / static_cast<double>(n_points);
        const auto report = extremal::max_osc_bound(make_params(alpha), cls);
        rows.push_back(XY{alpha, report.bound});
    }
    return rows;
}

std::vector<XY> extremal_profile(const RobinParams& params, double m, double M,
                                 double s, std::size_t n_points) {
    if (n_points < 2) throw std::invalid_argument("need n_points >= 2");
    const SourceClass cls = make_class(m, M, s);
    const auto report = extremal::max_osc_bound(params, cls);
    const PiecewiseQuadratic u = solve_step(params, report.source);
    std::vector<XY> rows;
    rows.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double x = -kPi + 2.0 * kPi * static_cast<double>(i) /
                                    static_cast<double>(n_points - 1);
        rows.push_back(XY{x, u.value(x)});
    }
    return rows;
}

std::vector<OscCurvePoint> osc_curves(double half_length, double baseline,
                                      std::span<const double> alphas,
                                      std::size_t n_points) {
    if (n_points < 2 || alphas.empty()) {
        throw std::invalid_argument("need n_points >= 2 and at least one alpha");
    }
    std::vector<OscCurvePoint> rows;
    rows.reserve(alphas.size() * n_points);
    for (double alpha : alphas) {
        const RobinParams params = make_params(alpha);
        for (std::size_t i = 0; i < n_points; ++i) {
            const double a = (kPi - half_length) * static_cast<double>(i) /
                             static_cast<double>(n_points - 1);
            rows.push_back(
                OscCurvePoint{alpha, a,
                              extremal::interval_osc(params, a, half_length, baseline)});
        }
    }
    return rows;
}

} // namespace robin::figures
