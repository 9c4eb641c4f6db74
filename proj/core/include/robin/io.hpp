#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "robin/approx.hpp"
#include "robin/extremal.hpp"
#include "robin/figures.hpp"
#include "robin/oracle.hpp"
#include "robin/piecewise.hpp"
#include "robin/source.hpp"

namespace robin::io {

using json = nlohmann::json;

// {"breakpoints":[...], "values":[...]}
json to_json(const StepSource& f);
StepSource step_source_from_json(const json& j);

// {"segments":[{"lo":..,"hi":..,"q2":..,"q1":..,"q0":..}, ...]}
json to_json(const PiecewiseQuadratic& u);
PiecewiseQuadratic piecewise_from_json(const json& j);

json to_json(const Extrema& e);

// {"bound":.., "source":{...}, "oracle_estimate":..|null, "gap_to_oracle":..|null}
json to_json(const extremal::ExtremalReport& report);

json to_json(const oracle::OracleVerdict& verdict);

// CSV rendering: ',' separator, '.' decimal point, header row, LF endings.
std::string format_double(double v);
std::string csv_convergence(const std::vector<oracle::ConvergenceRow>& rows);
std::string csv_xy(const std::string& x_name, const std::string& y_name,
                   const std::vector<figures::XY>& rows);
std::string csv_osc_curves(const std::vector<figures::OscCurvePoint>& rows);

// Minimal static SVG: one polyline per series over shared axes.
struct Series {
    std::string name;
    std::vector<figures::XY> points;
};
std::string svg_polylines(const std::vector<Series>& series, int width = 640,
                          int height = 400);

void write_file(const std::string& path, const std::string& content);

} // namespace robin::io
