#pragma once

#include <span>
#include <string>
#include <vector>

namespace ribbonspec {

/// Half-open interval [a, b).
struct Interval {
    double a = 0.0;
    double b = 0.0;

    bool contains(double x) const { return a <= x && x < b; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// An interval together with the falling-factorial order r attached to it.
struct IntervalSpec {
    double a = 0.0;
    double b = 0.0;
    int r = 1;

    Interval interval() const { return {a, b}; }
    friend bool operator==(const IntervalSpec&, const IntervalSpec&) = default;
};

/// Throws InvalidArgument if some a >= b or a < 0, OverlappingIntervals if
/// two intervals intersect.
void check_disjoint(std::span<const Interval> intervals);
void check_disjoint(std::span<const IntervalSpec> specs);

/// Parses `a:b` or `a:b:r`.
IntervalSpec parse_interval_spec(const std::string& text);

}  // namespace ribbonspec
