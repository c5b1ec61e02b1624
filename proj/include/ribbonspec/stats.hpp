#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "ribbonspec/interval.hpp"
#include "ribbonspec/poisson.hpp"

namespace ribbonspec {

/// (x)_r = x (x - 1) ... (x - r + 1).
std::int64_t falling_factorial(std::int64_t x, int r);

/// Uniform-width histogram over [lo, lo + bins * width).  Values outside are
/// ignored.  Accumulators with identical binning merge by adding counts.
class HistogramAccumulator {
public:
    HistogramAccumulator() = default;
    HistogramAccumulator(double lo, double width, std::size_t bins);

    void add(double value);
    void add_trials(std::int64_t n) { trials_ += n; }
    void merge(const HistogramAccumulator& other);

    double lo() const { return lo_; }
    double width() const { return width_; }
    std::size_t bins() const { return counts_.size(); }
    double bin_left(std::size_t i) const { return lo_ + static_cast<double>(i) * width_; }
    double bin_right(std::size_t i) const { return lo_ + static_cast<double>(i + 1) * width_; }
    std::int64_t count(std::size_t i) const { return counts_[i]; }
    const std::vector<std::int64_t>& counts() const { return counts_; }
    std::int64_t trials() const { return trials_; }

    friend bool operator==(const HistogramAccumulator&, const HistogramAccumulator&) = default;

private:
    double lo_ = 0.0;
    double width_ = 1.0;
    std::vector<std::int64_t> counts_;
    std::int64_t trials_ = 0;
};

struct DensityPoint {
    double center = 0.0;
    double density = 0.0;  ///< count / (trials * width)
};

std::vector<DensityPoint> histogram_density(const HistogramAccumulator& h);

struct MomentReport {
    std::vector<IntervalSpec> specs;
    double empirical = 0.0;  ///< sample mean of prod_i (N_i)_{r_i}
    double se = 0.0;
    double predicted = 0.0;
    double z = 0.0;
};

/// Mean and standard error (population variance / T) of the joint falling
/// factorial over trials.  Throws InsufficientSamples for fewer than 2.
MomentReport empirical_factorial_moment(std::span<const std::vector<std::int64_t>> samples,
                                        std::span<const IntervalSpec> specs, IntensityParams p);

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

/// Asymptotic Kolmogorov survival function P(K > lambda).
double kolmogorov_survival(double lambda);

/// One-sample Kolmogorov-Smirnov test.  Throws Unsorted or
/// InsufficientSamples (< 10).
KsResult ks_test(std::span<const double> sorted_samples, const std::function<double(double)>& cdf);

/// (count - mean) / sqrt(mean).
double poisson_count_test(std::int64_t total_count, double total_mean);

struct ChiSquareResult {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

/// Pearson goodness of fit of observed counts against probabilities (which
/// are renormalised).  dof = cells - 1; a single cell gives p = 1.
ChiSquareResult chi_square_test(std::span<const std::int64_t> observed, std::span<const double> probabilities);

}  // namespace ribbonspec
