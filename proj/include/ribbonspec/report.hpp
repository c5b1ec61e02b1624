#pragma once

#include <span>
#include <string>
#include <vector>

#include "ribbonspec/batch.hpp"

namespace ribbonspec {

struct SpectrumReport {
    int genus = 0;
    std::size_t trials = 0;
    IntensityParams params;
    std::vector<MomentReport> intervals;  ///< one single-interval moment per requested spec
    std::vector<MomentReport> moments;    ///< joint factorial moments
    KsResult girth_ks;
    HistogramAccumulator histogram;
};

struct ReportRequest {
    std::vector<IntervalSpec> intervals;
    std::vector<std::vector<IntervalSpec>> joint;
    double hist_lo = 0.0;
    double hist_width = 0.08;
    std::size_t hist_bins = 50;
};

/// Records must share genus and boundary length.  Throws
/// TruncationExceeded if an interval reaches past a record's b_max.
SpectrumReport build_report(std::span<const TrialRecord> records, const ReportRequest& request);

std::string report_json(const SpectrumReport& report);

/// `bin_left,bin_right,count,count_per_trial_per_unit`, %.17g.
std::string histogram_csv(const HistogramAccumulator& h);

/// Decimal with 17 significant digits.
std::string format17(double x);

}  // namespace ribbonspec
