#pragma once

#include <cstddef>
#include <vector>

#include "robin/params.hpp"

namespace robin {

// Admissible heat sources: m <= f <= M pointwise with total mass 2*pi*s
// (ground heat m, top heat M, average heat s, 0 <= m < s < M).
// The derived quantities drive every extremal formula:
//   half_length            l = pi (s - m)/(M - m), in (0, pi)
//   baseline               delta = m/(M - m)
//   complement_half_length pi - l
struct SourceClass {
    double m;
    double M;
    double s;
    double half_length;
    double baseline;
    double complement_half_length;
};

SourceClass make_class(double m, double M, double s);

// Piecewise-constant heat source on [-pi, pi]: nondecreasing breakpoints
// t_0 = -pi <= t_1 <= ... <= t_n = pi and one density value per cell
// [t_{k-1}, t_k]. Zero-width cells are legal and carry no mass.
class StepSource {
  public:
    StepSource(std::vector<double> breakpoints, std::vector<double> values);

    // f == value on every cell.
    static StepSource constant(double value, std::size_t n_cells = 1);
    // Bang-bang member of cls: m plus (M - m) on the interval of half-length
    // cls.half_length centered at `center`.
    static StepSource class_interval(const SourceClass& cls, double center);
    // baseline + indicator of I(center, half_length).
    static StepSource baseline_interval(double center, double half_length,
                                        double baseline);

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t cell_count() const { return values_.size(); }

    double mass() const;
    // Cells are half-open [t_{k-1}, t_k); the last cell also owns x = pi.
    double value_at(double x) const;
    // The source x -> f(-x): cells reversed, breakpoints negated.
    StepSource reflected() const;

    bool in_class(const SourceClass& cls, double tol = default_tolerance()) const;

  private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
};

// Baseline-plus-interval source delta + chi_{I(center, half_length)}.
struct IntervalSource {
    double center;
    double half_length;
    double baseline;

    StepSource to_step() const;
};

} // namespace robin
