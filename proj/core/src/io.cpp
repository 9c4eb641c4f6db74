#include "robin/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace robin::io {

json to_json(const StepSource& f) {
    return json{{"breakpoints", f.breakpoints()}, {"values", f.values()}};
}

StepSource step_source_from_json(const json& j) {
    if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values")) {
        throw std::invalid_argument(
            "step source JSON needs \"breakpoints\" and \"values\" arrays");
    }
    return StepSource(j.at("breakpoints").get<std::vector<double>>(),
                      j.at("values").get<std::vector<double>>());
}

json to_json(const PiecewiseQuadratic& u) {
    json segments = json::array();
    for (const Segment& s : u.segments()) {
        segments.push_back(json{
            {"lo", s.lo}, {"hi", s.hi}, {"q2", s.q2}, {"q1", s.q1}, {"q0", s.q0}});
    }
    return json{{"segments", std::move(segments)}};
}

PiecewiseQuadratic piecewise_from_json(const json& j) {
    if (!j.is_object() || !j.contains("segments")) {
        throw std::invalid_argument("piecewise JSON needs a \"segments\" array");
    }
    std::vector<Segment> segments;
    for (const json& s : j.at("segments")) {
        segments.push_back(Segment{s.at("lo").get<double>(), s.at("hi").get<double>(),
                                   s.at("q2").get<double>(), s.at("q1").get<double>(),
                                   s.at("q0").get<double>()});
    }
    return PiecewiseQuadratic(std::move(segments));
}

json to_json(const Extrema& e) {
    return json{{"min", e.min_value},
                {"argmin", e.argmin},
                {"max", e.max_value},
                {"argmax", e.argmax},
                {"osc", e.osc}};
}

json to_json(const extremal::ExtremalReport& report) {
    json j{{"bound", report.bound}, {"source", to_json(report.source)}};
    j["oracle_estimate"] =
        report.oracle_estimate ? json(*report.oracle_estimate) : json(nullptr);
    j["gap_to_oracle"] =
        report.gap_to_oracle ? json(*report.gap_to_oracle) : json(nullptr);
    return j;
}

json to_json(const oracle::OracleVerdict& verdict) {
    json j{{"oracle_value", verdict.oracle_value},
           {"closed_form_value", verdict.closed_form_value},
           {"abs_gap", verdict.abs_gap},
           {"pass", verdict.pass}};
    if (const double* center = std::get_if<double>(&verdict.argmax)) {
        j["argmax"] = *center;
    } else {
        j["argmax"] = to_json(std::get<StepSource>(verdict.argmax));
    }
    return j;
}

std::string format_double(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", v);
    return buffer;
}

std::string csv_convergence(const std::vector<oracle::ConvergenceRow>& rows) {
    std::string out = "n,sup_norm,osc_diff,l1_dist,envelope\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + ',' + format_double(r.sup_norm) + ',' +
               format_double(r.osc_diff) + ',' + format_double(r.l1_dist) + ',' +
               format_double(r.envelope) + '\n';
    }
    return out;
}

std::string csv_xy(const std::string& x_name, const std::string& y_name,
                   const std::vector<figures::XY>& rows) {
    std::string out = x_name + ',' + y_name + '\n';
    for (const auto& r : rows) {
        out += format_double(r.x) + ',' + format_double(r.y) + '\n';
    }
    return out;
}

std::string csv_osc_curves(const std::vector<figures::OscCurvePoint>& rows) {
    std::string out = "alpha,a,osc\n";
    for (const auto& r : rows) {
        out += format_double(r.alpha) + ',' + format_double(r.center) + ',' +
               format_double(r.value) + '\n';
    }
    return out;
}

std::string svg_polylines(const std::vector<Series>& series, int width,
                          int height) {
    double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
    bool first = true;
    for (const auto& s : series) {
        for (const auto& p : s.points) {
            if (first) {
                x_lo = x_hi = p.x;
                y_lo = y_hi = p.y;
                first = false;
            }
            x_lo = std::min(x_lo, p.x);
            x_hi = std::max(x_hi, p.x);
            y_lo = std::min(y_lo, p.y);
            y_hi = std::max(y_hi, p.y);
        }
    }
    if (x_hi <= x_lo) x_hi = x_lo + 1.0;
    if (y_hi <= y_lo) y_hi = y_lo + 1.0;

    const int margin = 40;
    const double sx = (width - 2 * margin) / (x_hi - x_lo);
    const double sy = (height - 2 * margin) / (y_hi - y_lo);
    auto px = [&](double x) { return margin + (x - x_lo) * sx; };
    auto py = [&](double y) { return height - margin - (y - y_lo) * sy; };

    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(width) + "\" height=\"" + std::to_string(height) +
                      "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<line x1=\"" + format_double(margin) + "\" y1=\"" + format_double(py(y_lo)) +
           "\" x2=\"" + format_double(width - margin) + "\" y2=\"" +
           format_double(py(y_lo)) + "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + format_double(px(x_lo)) + "\" y1=\"" + format_double(margin) +
           "\" x2=\"" + format_double(px(x_lo)) + "\" y2=\"" +
           format_double(height - margin) + "\" stroke=\"black\"/>\n";
    std::size_t color = 0;
    for (const auto& s : series) {
        out += "<polyline fill=\"none\" stroke=\"" +
               std::string(kColors[color++ % 6]) + "\" stroke-width=\"1.5\" points=\"";
        for (const auto& p : s.points) {
            out += format_double(px(p.x)) + ',' + format_double(py(p.y)) + ' ';
        }
        out += "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path);
}

} // namespace robin::io
