#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "ribbonspec/halfedge.hpp"
#include "ribbonspec/interval.hpp"

namespace ribbonspec {

/// A simple cycle: edges[i] joins vertices[i] and vertices[i + 1] (indices
/// mod k).  Canonical form is the lexicographically least edge sequence
/// among all rotations and the reversal.
struct Cycle {
    std::vector<std::uint32_t> edges;
    std::vector<std::uint32_t> vertices;
    double length = 0.0;

    std::size_t edge_count() const { return edges.size(); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

Cycle canonical(const Cycle& cycle);

/// All canonical simple cycles with length < b_max and at most d_max edges,
/// sorted by (length, edges).
std::vector<Cycle> enumerate_cycles(const MetricMap& map, double b_max, int d_max);

/// Exact weighted girth.  Throws Acyclic if the map is a tree.
double girth(const MetricMap& map);

struct SpectrumEntry {
    double length = 0.0;
    int edges = 0;
    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Truncated length spectrum of one map.
struct SpectrumRecord {
    std::vector<SpectrumEntry> cycles;  ///< ascending by length
    double girth = std::numeric_limits<double>::infinity();
    double b_max = 4.0;
    int d_max = 12;

    friend bool operator==(const SpectrumRecord&, const SpectrumRecord&) = default;
};

SpectrumRecord make_spectrum(const MetricMap& map, double b_max, int d_max);

/// Cycle count per interval, half-open.  Throws TruncationExceeded if an
/// interval reaches beyond the record's b_max.
std::vector<std::int64_t> spectrum_counts(const SpectrumRecord& rec, std::span<const Interval> intervals);

}  // namespace ribbonspec
