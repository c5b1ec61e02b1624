#include "ribbonspec/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>

#include "ribbonspec/error.hpp"

namespace ribbonspec {

std::int64_t falling_factorial(std::int64_t x, int r)
{
    std::int64_t out = 1;
    for (int i = 0; i < r; ++i) {
        if (x - i <= 0) return 0;
        out *= x - i;
    }
    return out;
}

HistogramAccumulator::HistogramAccumulator(double lo, double width, std::size_t bins)
    : lo_(lo), width_(width), counts_(bins, 0)
{
    if (!(width > 0.0)) throw Error(ErrorKind::InvalidArgument, "bin width must be positive");
}

void HistogramAccumulator::add(double value)
{
    if (value < lo_) return;
    const double pos = (value - lo_) / width_;
    if (!(pos < static_cast<double>(counts_.size()))) return;
    auto i = static_cast<std::size_t>(pos);
    // Guard the half-open edges against rounding in the division.
    if (i > 0 && value < bin_left(i)) --i;
    if (i + 1 < counts_.size() && value >= bin_right(i)) ++i;
    ++counts_[i];
}

void HistogramAccumulator::merge(const HistogramAccumulator& other)
{
    if (other.lo_ != lo_ || other.width_ != width_ || other.counts_.size() != counts_.size()) {
        throw Error(ErrorKind::InvalidArgument, "cannot merge histograms with different bins");
    }
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
    trials_ += other.trials_;
}

std::vector<DensityPoint> histogram_density(const HistogramAccumulator& h)
{
    if (h.trials() < 1) throw Error(ErrorKind::InsufficientSamples, "histogram has no trials");
    std::vector<DensityPoint> out;
    for (std::size_t i = 0; i < h.bins(); ++i) {
        out.push_back({0.5 * (h.bin_left(i) + h.bin_right(i)),
                       static_cast<double>(h.count(i)) / (static_cast<double>(h.trials()) * h.width())});
    }
    return out;
}

MomentReport empirical_factorial_moment(std::span<const std::vector<std::int64_t>> samples,
                                        std::span<const IntervalSpec> specs, IntensityParams p)
{
    if (samples.size() < 2) throw Error(ErrorKind::InsufficientSamples, "need at least 2 trials");
    MomentReport rep;
    rep.specs.assign(specs.begin(), specs.end());
    rep.predicted = factorial_moment_prediction(specs, p);
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& counts : samples) {
        if (counts.size() != specs.size()) {
            throw Error(ErrorKind::InvalidArgument, "count vector does not match interval specs");
        }
        double value = 1.0;
        for (std::size_t i = 0; i < specs.size(); ++i) {
            value *= static_cast<double>(falling_factorial(counts[i], specs[i].r));
        }
        sum += value;
        sum_sq += value * value;
    }
    const double t = static_cast<double>(samples.size());
    rep.empirical = sum / t;
    const double var = std::max(0.0, sum_sq / t - rep.empirical * rep.empirical);
    rep.se = std::sqrt(var / t);
    const double diff = rep.empirical - rep.predicted;
    if (rep.se > 0.0) {
        rep.z = diff / rep.se;
    } else {
        rep.z = diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
    }
    return rep;
}

double kolmogorov_survival(double lambda)
{
    if (lambda <= 0.0) return 1.0;
    constexpr double pi = std::numbers::pi;
    if (lambda < 1.18) {
        // Jacobi-transformed form converges fast for small arguments.
        double sum = 0.0;
        for (int k = 1; k <= 20; ++k) {
            const double j = 2.0 * k - 1.0;
            sum += std::exp(-j * j * pi * pi / (8.0 * lambda * lambda));
        }
        return std::clamp(1.0 - std::sqrt(2.0 * pi) / lambda * sum, 0.0, 1.0);
    }
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1 ? term : -term);
        if (term < 1e-18) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test(std::span<const double> sorted_samples, const std::function<double(double)>& cdf)
{
    const std::size_t n = sorted_samples.size();
    if (n < 10) throw Error(ErrorKind::InsufficientSamples, "KS test needs at least 10 samples");
    if (!std::is_sorted(sorted_samples.begin(), sorted_samples.end())) {
        throw Error(ErrorKind::Unsorted, "KS samples must be sorted ascending");
    }
    double d = 0.0;
    const double nn = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(sorted_samples[i]);
        d = std::max({d, static_cast<double>(i + 1) / nn - f, f - static_cast<double>(i) / nn});
    }
    const double sqrt_n = std::sqrt(nn);
    return {d, kolmogorov_survival((sqrt_n + 0.12 + 0.11 / sqrt_n) * d)};
}

double poisson_count_test(std::int64_t total_count, double total_mean)
{
    if (!(total_mean > 0.0)) throw Error(ErrorKind::InvalidArgument, "Poisson mean must be positive");
    return (static_cast<double>(total_count) - total_mean) / std::sqrt(total_mean);
}

ChiSquareResult chi_square_test(std::span<const std::int64_t> observed, std::span<const double> probabilities)
{
    if (observed.size() != probabilities.size() || observed.empty()) {
        throw Error(ErrorKind::InvalidArgument, "chi-square needs matching, non-empty cells");
    }
    const double total = static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::int64_t{0}));
    const double mass = std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
    ChiSquareResult res;
    res.dof = static_cast<int>(observed.size()) - 1;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double expected = total * probabilities[i] / mass;
        if (!(expected > 0.0)) throw Error(ErrorKind::InvalidArgument, "chi-square cell with zero expectation");
        const double diff = static_cast<double>(observed[i]) - expected;
        res.statistic += diff * diff / expected;
    }
    if (res.dof > 0) {
        res.p_value = boost::math::cdf(boost::math::complement(boost::math::chi_squared(res.dof), res.statistic));
    }
    return res;
}

}  // namespace ribbonspec
