#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ribbonspec/cycles.hpp"
#include "ribbonspec/sampler.hpp"
#include "ribbonspec/stats.hpp"

namespace ribbonspec {

struct BatchConfig {
    int genus = 1;
    double boundary_total = 12.0;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1000;
    double b_max = 4.0;
    int d_max = 12;
    SamplerMethod method = SamplerMethod::Pairing;
    std::uint64_t rejection_budget = 1'000'000;
    /// Sub-streams tried per trial before a RejectionBudgetExceeded escapes.
    std::uint32_t max_substreams = 16;

    static BatchConfig for_genus(int genus, std::uint64_t seed, std::uint64_t trials);
    void validate() const;
};

/// One sampled map together with its truncated spectrum.
struct TrialRecord {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    int genus = 0;
    double boundary_total = 0.0;
    Permutation sigma;
    Permutation alpha;
    std::vector<double> lengths;
    std::uint64_t rejections = 0;
    std::uint32_t substream = 0;  ///< > 0 when earlier sub-streams hit the rejection budget
    SpectrumRecord spectrum;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

TrialRecord run_trial(const BatchConfig& cfg, std::uint64_t trial);

/// Reference implementation: trials in index order on the calling thread.
std::vector<TrialRecord> run_trials_serial(const BatchConfig& cfg);

/// Same records as run_trials_serial, computed on `workers` OpenMP threads.
std::vector<TrialRecord> run_trials_parallel(const BatchConfig& cfg, int workers);

/// Worker count after the RIBBONSPEC_THREADS override.
int resolve_workers(int requested);

std::string to_json_line(const TrialRecord& rec);
TrialRecord from_json_line(const std::string& line);

/// Writes an optional metadata line followed by one record per line.
void write_jsonl(std::ostream& out, std::span<const TrialRecord> records, const BatchConfig* meta);
/// Reads records, skipping metadata lines.  Throws Io on malformed input.
std::vector<TrialRecord> read_jsonl(std::istream& in);

/// Histogram of all recorded cycle lengths, each trial counted once.
HistogramAccumulator cycle_histogram(std::span<const TrialRecord> records, double lo, double width,
                                     std::size_t bins);
HistogramAccumulator cycle_histogram_parallel(std::span<const TrialRecord> records, double lo, double width,
                                              std::size_t bins, int workers);

/// counts[t][i] = number of cycles of trial t in intervals[i].
std::vector<std::vector<std::int64_t>> interval_counts(std::span<const TrialRecord> records,
                                                       std::span<const IntervalSpec> specs);

std::vector<double> sorted_girths(std::span<const TrialRecord> records);

}  // namespace ribbonspec
