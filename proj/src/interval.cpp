#include "ribbonspec/interval.hpp"

#include <algorithm>
#include <cstdlib>

#include "ribbonspec/error.hpp"

namespace ribbonspec {

void check_disjoint(std::span<const Interval> intervals)
{
    std::vector<Interval> sorted(intervals.begin(), intervals.end());
    for (const auto& iv : sorted) {
        if (!(iv.a >= 0.0) || !(iv.a < iv.b)) {
            throw Error(ErrorKind::InvalidArgument, "interval needs 0 <= a < b");
        }
    }
    std::sort(sorted.begin(), sorted.end(), [](auto& x, auto& y) { return x.a < y.a; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].a < sorted[i - 1].b) {
            throw Error(ErrorKind::OverlappingIntervals, "intervals must be pairwise disjoint");
        }
    }
}

void check_disjoint(std::span<const IntervalSpec> specs)
{
    std::vector<Interval> ivs;
    for (const auto& s : specs) {
        if (s.r < 0) throw Error(ErrorKind::InvalidArgument, "multiplicity must be >= 0");
        ivs.push_back(s.interval());
    }
    check_disjoint(ivs);
}

IntervalSpec parse_interval_spec(const std::string& text)
{
    IntervalSpec spec;
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(':', start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    if (parts.size() < 2 || parts.size() > 3) {
        throw Error(ErrorKind::InvalidArgument, "interval must look like a:b or a:b:r, got '" + text + "'");
    }
    auto number = [&](const std::string& s) {
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (s.empty() || *end != '\0') throw Error(ErrorKind::InvalidArgument, "bad number '" + s + "'");
        return v;
    };
    spec.a = number(parts[0]);
    spec.b = number(parts[1]);
    if (parts.size() == 3) {
        const double r = number(parts[2]);
        if (r < 0 || r != static_cast<int>(r)) throw Error(ErrorKind::InvalidArgument, "r must be a non-negative integer");
        spec.r = static_cast<int>(r);
    }
    if (!(spec.a >= 0.0) || !(spec.a < spec.b)) throw Error(ErrorKind::InvalidArgument, "interval needs 0 <= a < b");
    return spec;
}

}  // namespace ribbonspec
