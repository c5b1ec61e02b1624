#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "ribbonspec/rng.hpp"

using ribbonspec::PhiloxStream;

TEST_CASE("Philox4x32-10 known answers")
{
    using B = std::array<std::uint32_t, 4>;
    CHECK(PhiloxStream::block({0, 0, 0, 0}, {0, 0}) == B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(PhiloxStream::block({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
}

TEST_CASE("streams are pure functions of seed, trial and substream")
{
    PhiloxStream a(42, 7), b(42, 7), c(42, 8), d(43, 7), e(42, 7, 1);
    std::set<std::uint64_t> firsts;
    for (int i = 0; i < 100; ++i) {
        const auto x = a();
        CHECK(x == b());
        if (i == 0) {
            firsts = {x, c(), d(), e()};
        }
    }
    CHECK(firsts.size() == 4);
    CHECK(a.blocks_drawn() == 50);
}

TEST_CASE("uniform, exponential and bounded draws")
{
    PhiloxStream rng(1, 2, 3);
    double sum = 0.0, exp_sum = 0.0;
    constexpr int n = 200000;
    std::array<int, 7> bins{};
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform_open();
        REQUIRE(u > 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        exp_sum += rng.exponential();
        const auto k = rng.below(7);
        REQUIRE(k < 7);
        ++bins[k];
    }
    // Means within 5 standard errors.
    CHECK(std::abs(sum / n - 0.5) < 5.0 * std::sqrt(1.0 / 12.0 / n));
    CHECK(std::abs(exp_sum / n - 1.0) < 5.0 * std::sqrt(1.0 / n));
    for (int c : bins) CHECK(std::abs(c - n / 7.0) < 5.0 * std::sqrt(n / 7.0));
}

TEST_CASE("shuffle is a deterministic permutation")
{
    std::vector<int> a(50), b(50);
    for (int i = 0; i < 50; ++i) a[i] = b[i] = i;
    PhiloxStream r1(9, 9), r2(9, 9);
    ribbonspec::shuffle(a.begin(), a.end(), r1);
    ribbonspec::shuffle(b.begin(), b.end(), r2);
    CHECK(a == b);
    std::vector<int> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 50; ++i) CHECK(sorted[i] == i);
}
