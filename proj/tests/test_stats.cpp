#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ribbonspec/error.hpp"
#include "ribbonspec/rng.hpp"
#include "ribbonspec/stats.hpp"

using namespace ribbonspec;

namespace {

std::int64_t poisson_draw(double mean, PhiloxStream& rng)
{
    const double u = rng.uniform_open();
    double p = std::exp(-mean), cdf = p;
    std::int64_t k = 0;
    while (u > cdf && k < 1000) {
        ++k;
        p *= mean / static_cast<double>(k);
        cdf += p;
    }
    return k;
}

}  // namespace

TEST_CASE("falling factorial")
{
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(3, 0) == 1);
    CHECK(falling_factorial(2, 3) == 0);
    CHECK(falling_factorial(0, 0) == 1);
    CHECK(falling_factorial(7, 7) == 5040);
}

TEST_CASE("histogram accumulation and density")
{
    HistogramAccumulator h(0.0, 0.08, 50);
    for (int i = 0; i < 8; ++i) h.add(0.5);
    h.add(-0.1);
    h.add(4.0);
    h.add_trials(100);
    const auto d = histogram_density(h);
    CHECK(d.size() == 50);
    CHECK(d[6].density == doctest::Approx(1.0));
    CHECK(d[6].center == doctest::Approx(0.52));
    CHECK(d[0].density == 0.0);
    CHECK(h.bin_left(6) == doctest::Approx(0.48));
    CHECK(h.bin_right(6) == doctest::Approx(0.56));

    HistogramAccumulator a(0.0, 0.5, 4), b(0.0, 0.5, 4), c(0.0, 0.5, 4);
    a.add(0.1), a.add_trials(1);
    b.add(1.2), b.add(1.3), b.add_trials(2);
    c.add(1.9), c.add_trials(3);
    HistogramAccumulator left = a, right = b;
    left.merge(b), left.merge(c);
    right.merge(c);
    HistogramAccumulator right_total = a;
    right_total.merge(right);
    CHECK(left == right_total);
    HistogramAccumulator swapped = c;
    swapped.merge(a), swapped.merge(b);
    CHECK(swapped == left);
    CHECK(left.trials() == 6);
    // Density of the merged accumulator is the trial-weighted mean.
    const auto merged = histogram_density(left);
    const auto da = histogram_density(a), db = histogram_density(b), dc = histogram_density(c);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(merged[i].density == doctest::Approx((da[i].density + 2 * db[i].density + 3 * dc[i].density) / 6.0));
    }
    CHECK_THROWS_AS(a.merge(HistogramAccumulator(0.0, 0.25, 4)), Error);
    CHECK_THROWS_AS(histogram_density(HistogramAccumulator(0.0, 1.0, 3)), Error);
}

TEST_CASE("empirical factorial moments")
{
    const std::vector<IntervalSpec> r2{{0.0, 1.0, 2}};
    std::vector<std::vector<std::int64_t>> twos(10, {2});
    auto rep = empirical_factorial_moment(twos, r2, {1.0});
    CHECK(rep.empirical == 2.0);
    CHECK(rep.se == 0.0);

    const std::vector<IntervalSpec> r1{{0.0, 1.0, 1}};
    std::vector<std::vector<std::int64_t>> alt;
    for (int t = 0; t < 100; ++t) alt.push_back({t % 2 == 0 ? 0 : 2});
    rep = empirical_factorial_moment(alt, r1, {1.0});
    CHECK(rep.empirical == 1.0);
    CHECK(rep.se == doctest::Approx(1.0 / std::sqrt(100.0)));

    std::vector<std::vector<std::int64_t>> mixed{{3}, {0}, {5}, {1}};
    rep = empirical_factorial_moment(mixed, r1, {1.0});
    CHECK(rep.empirical == doctest::Approx(9.0 / 4.0));

    const std::vector<std::vector<std::int64_t>> one{{1}};
    CHECK_THROWS_AS(empirical_factorial_moment(one, r1, {1.0}), Error);
    const std::vector<std::vector<std::int64_t>> wrong{{1, 2}, {1, 2}};
    CHECK_THROWS_AS(empirical_factorial_moment(wrong, r1, {1.0}), Error);
}

TEST_CASE("synthetic Poisson data passes the moment tests")
{
    const IntensityParams p{1.0};
    const std::vector<Interval> iv{{0.0, 1.0}, {1.0, 2.0}, {2.0, 3.0}};
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        PhiloxStream rng(seed, 0);
        std::vector<std::vector<std::int64_t>> counts;
        for (int t = 0; t < 10000; ++t) {
            std::vector<std::int64_t> row;
            for (const auto& i : iv) row.push_back(poisson_draw(expected_count(i.a, i.b, p), rng));
            counts.push_back(std::move(row));
        }
        for (int r = 1; r <= 3; ++r) {
            const std::vector<IntervalSpec> specs{{0.0, 1.0, r}, {1.0, 2.0, r}, {2.0, 3.0, r}};
            for (std::size_t i = 0; i < specs.size(); ++i) {
                std::vector<std::vector<std::int64_t>> column;
                for (const auto& row : counts) column.push_back({row[i]});
                const std::vector<IntervalSpec> one{specs[i]};
                const auto rep = empirical_factorial_moment(column, one, p);
                CHECK(std::abs(rep.z) < 4.0);
            }
        }
        const std::vector<IntervalSpec> joint{{0.0, 1.0, 1}, {1.0, 2.0, 1}, {2.0, 3.0, 1}};
        CHECK(std::abs(empirical_factorial_moment(counts, joint, p).z) < 4.0);
        std::int64_t total = 0;
        for (const auto& row : counts) total += row[1];
        CHECK(std::abs(poisson_count_test(total, 10000 * expected_count(1.0, 2.0, p))) < 4.0);
    }
}

TEST_CASE("Poisson count z-score")
{
    CHECK(poisson_count_test(100, 100.0) == 0.0);
    CHECK(poisson_count_test(110, 100.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(poisson_count_test(1, 0.0), Error);
}

TEST_CASE("Kolmogorov-Smirnov test")
{
    CHECK(kolmogorov_survival(1.36) == doctest::Approx(0.0494).epsilon(2e-2));
    CHECK(kolmogorov_survival(0.5) == doctest::Approx(0.9639).epsilon(1e-3));
    CHECK(kolmogorov_survival(3.0) < 1e-6);
    auto cdf = [](double x) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x); };
    for (std::uint64_t seed : {1, 2, 3}) {
        PhiloxStream rng(seed, 5);
        std::vector<double> xs(2000);
        for (auto& x : xs) x = rng.exponential();
        std::sort(xs.begin(), xs.end());
        CHECK(ks_test(xs, cdf).p_value > 0.001);
        std::vector<double> shifted = xs;
        for (auto& x : shifted) x += 0.5;
        CHECK(ks_test(shifted, cdf).p_value < 0.001);
    }
    const std::vector<double> median(100, std::log(2.0));
    CHECK(ks_test(median, cdf).statistic == doctest::Approx(0.5).epsilon(1e-12));
    const std::vector<double> unsorted{3, 2, 1, 4, 5, 6, 7, 8, 9, 10};
    try {
        ks_test(unsorted, cdf);
        FAIL("expected Unsorted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Unsorted);
    }
    const std::vector<double> few{1, 2, 3};
    CHECK_THROWS_AS(ks_test(few, cdf), Error);
}

TEST_CASE("chi-square goodness of fit")
{
    const std::vector<std::int64_t> obs{10, 20, 30};
    const std::vector<double> eq{1, 1, 1};
    const auto r = chi_square_test(obs, eq);
    CHECK(r.statistic == doctest::Approx(10.0));
    CHECK(r.dof == 2);
    CHECK(r.p_value == doctest::Approx(std::exp(-5.0)).epsilon(1e-10));
    const std::vector<std::int64_t> single{42};
    const std::vector<double> one{1.0};
    CHECK(chi_square_test(single, one).p_value == 1.0);
    const std::vector<std::int64_t> exact{25, 75};
    const std::vector<double> q{0.25, 0.75};
    CHECK(chi_square_test(exact, q).p_value == doctest::Approx(1.0));
}
