#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ribbonspec/cycles.hpp"
#include "ribbonspec/error.hpp"
#include "ribbonspec/sampler.hpp"

using namespace ribbonspec;

namespace {

MetricMap theta(std::vector<double> lengths)
{
    return MetricMap(HalfEdgeStructure::build({2, 3, 4, 5, 0, 1}, {1, 0, 3, 2, 5, 4}), std::move(lengths));
}

// Two vertices joined by an edge, each carrying a self-loop.
MetricMap dumbbell(std::vector<double> lengths)
{
    return MetricMap(HalfEdgeStructure::build({1, 2, 0, 4, 5, 3}, {1, 0, 3, 2, 5, 4}), std::move(lengths));
}

struct SubsetCycle {
    std::vector<std::uint32_t> edges;  // sorted
    double length;
    bool operator<(const SubsetCycle& o) const { return edges < o.edges; }
    bool operator==(const SubsetCycle& o) const { return edges == o.edges; }
};

/// Every edge subset whose edges form one connected 2-regular subgraph.
std::vector<SubsetCycle> brute_force_cycles(const MetricMap& map)
{
    const auto& g = map.graph();
    const auto e = static_cast<std::uint32_t>(g.edge_count());
    REQUIRE(e <= 20);
    std::vector<SubsetCycle> out;
    for (std::uint32_t mask = 1; mask < (1u << e); ++mask) {
        std::vector<int> degree(g.vertex_count(), 0);
        std::vector<std::uint32_t> parent(g.vertex_count());
        std::iota(parent.begin(), parent.end(), 0u);
        auto find = [&](std::uint32_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        SubsetCycle c{{}, 0.0};
        for (std::uint32_t k = 0; k < e; ++k) {
            if (!(mask >> k & 1)) continue;
            const auto [u, v] = g.edge_endpoints(k);
            ++degree[u];
            ++degree[v];
            parent[find(u)] = find(v);
            c.edges.push_back(k);
            c.length += map.length(k);
        }
        bool ok = true;
        std::uint32_t root = std::numeric_limits<std::uint32_t>::max();
        for (std::uint32_t v = 0; v < g.vertex_count() && ok; ++v) {
            if (degree[v] == 0) continue;
            if (degree[v] != 2) ok = false;
            if (root == std::numeric_limits<std::uint32_t>::max()) root = find(v);
            else if (find(v) != root) ok = false;
        }
        if (ok) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SubsetCycle> as_subsets(const std::vector<Cycle>& cycles)
{
    std::vector<SubsetCycle> out;
    for (const auto& c : cycles) {
        SubsetCycle s{c.edges, c.length};
        std::sort(s.edges.begin(), s.edges.end());
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("theta graph cycles")
{
    const auto m = theta({1.0, 2.0, 3.0});
    const auto four = enumerate_cycles(m, 4.0, 12);
    REQUIRE(four.size() == 1);
    CHECK(four[0].length == 3.0);
    CHECK(four[0].edges == std::vector<std::uint32_t>{0, 1});
    const auto six = enumerate_cycles(m, 6.0, 12);
    REQUIRE(six.size() == 3);
    CHECK(six[0].length == 3.0);
    CHECK(six[1].length == 4.0);
    CHECK(six[2].length == 5.0);
    CHECK(enumerate_cycles(m, 6.0, 1).empty());
    CHECK(girth(m) == 3.0);
    CHECK(girth(theta({1.0, 1.0, 1.0})) == 2.0);
}

TEST_CASE("self-loops are one-edge cycles")
{
    const auto m = dumbbell({0.7, 1.0, 2.0});
    const auto cycles = enumerate_cycles(m, 4.0, 12);
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0].length == 0.7);
    CHECK(cycles[0].edge_count() == 1);
    CHECK(cycles[1].length == 2.0);
    CHECK(girth(m) == 0.7);
}

TEST_CASE("trees are acyclic")
{
    const MetricMap tree(HalfEdgeStructure::build({0, 1}, {1, 0}), {1.5});
    CHECK(enumerate_cycles(tree, 10.0, 12).empty());
    try {
        girth(tree);
        FAIL("expected Acyclic");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Acyclic);
    }
}

TEST_CASE("canonical form is invariant under rotation and reversal")
{
    for (std::uint64_t t = 0; t < 20; ++t) {
        const auto s = sample_map(SamplerConfig::for_genus(3, 77, t));
        for (const auto& c : enumerate_cycles(s.map, 1e9, 100)) {
            CHECK(canonical(c) == c);
            const std::size_t k = c.edge_count();
            for (std::size_t r = 0; r < k; ++r) {
                Cycle rot = c;
                std::rotate(rot.edges.begin(), rot.edges.begin() + static_cast<std::ptrdiff_t>(r), rot.edges.end());
                std::rotate(rot.vertices.begin(), rot.vertices.begin() + static_cast<std::ptrdiff_t>(r), rot.vertices.end());
                CHECK(canonical(rot) == c);
                // Reverse: edges e_{k-1} ... e_0 walk the vertices v_0 v_{k-1} ... v_1.
                Cycle rev = rot;
                std::reverse(rev.edges.begin(), rev.edges.end());
                std::reverse(rev.vertices.begin() + 1, rev.vertices.end());
                CHECK(canonical(rev) == c);
            }
        }
    }
}

TEST_CASE("enumeration matches brute force over edge subsets at genus 3")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto s = sample_map(SamplerConfig::for_genus(3, seed, 0));
        const auto oracle = brute_force_cycles(s.map);
        const auto all = enumerate_cycles(s.map, std::numeric_limits<double>::infinity(), 100);
        REQUIRE(as_subsets(all) == oracle);
        for (const auto& c : all) {
            auto v = c.vertices;
            std::sort(v.begin(), v.end());
            CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
            CHECK(v.size() == c.edge_count());
        }
        std::vector<SubsetCycle> truncated;
        for (const auto& c : oracle) {
            if (c.length < 2.5 && c.edges.size() <= 6) truncated.push_back(c);
        }
        CHECK(as_subsets(enumerate_cycles(s.map, 2.5, 6)) == truncated);
        double shortest = std::numeric_limits<double>::infinity();
        for (const auto& c : oracle) shortest = std::min(shortest, c.length);
        CHECK(girth(s.map) == doctest::Approx(shortest).epsilon(1e-12));
    }
}

TEST_CASE("girth equals the shortest enumerated cycle at genus 8")
{
    for (std::uint64_t t = 0; t < 1000; ++t) {
        const auto s = sample_map(SamplerConfig::for_genus(8, 5, t));
        const auto e = static_cast<int>(s.map.graph().edge_count());
        const double g = girth(s.map);
        const auto cycles = enumerate_cycles(s.map, g * (1.0 + 1e-9), e);
        REQUIRE_FALSE(cycles.empty());
        CHECK(cycles.front().length == doctest::Approx(g).epsilon(1e-12));
    }
}

TEST_CASE("girth equals the minimum over the untruncated enumeration at genus 8")
{
    for (std::uint64_t t = 0; t < 1000; ++t) {
        const auto s = sample_map(SamplerConfig::for_genus(8, 6, t));
        const auto e = static_cast<int>(s.map.graph().edge_count());
        const auto cycles = enumerate_cycles(s.map, 1e3, e);
        REQUIRE_FALSE(cycles.empty());
        CHECK(cycles.front().length == doctest::Approx(girth(s.map)).epsilon(1e-12));
    }
}

TEST_CASE("spectrum scales exactly with powers of two")
{
    const auto s = sample_map(SamplerConfig::for_genus(5, 3, 1));
    std::vector<double> doubled = s.map.lengths();
    for (double& x : doubled) x *= 2.0;
    const MetricMap big(s.map.graph(), doubled);
    const auto a = make_spectrum(s.map, 4.0, 12);
    const auto b = make_spectrum(big, 8.0, 12);
    REQUIRE(a.cycles.size() == b.cycles.size());
    for (std::size_t i = 0; i < a.cycles.size(); ++i) {
        CHECK(b.cycles[i].length == 2.0 * a.cycles[i].length);
        CHECK(b.cycles[i].edges == a.cycles[i].edges);
    }
    CHECK(b.girth == 2.0 * a.girth);
}

TEST_CASE("spectrum records and interval counts")
{
    const auto m = theta({1.0, 2.0, 3.0});
    const auto rec = make_spectrum(m, 6.0, 12);
    CHECK(std::is_sorted(rec.cycles.begin(), rec.cycles.end(),
                         [](const SpectrumEntry& x, const SpectrumEntry& y) { return x.length < y.length; }));
    const std::vector<Interval> iv{{0.0, 4.0}, {4.0, 6.0}};
    CHECK(spectrum_counts(rec, iv) == std::vector<std::int64_t>{1, 2});
    SpectrumRecord empty;
    empty.b_max = 6.0;
    CHECK(spectrum_counts(empty, iv) == std::vector<std::int64_t>{0, 0});
    const std::vector<Interval> beyond{{0.0, 7.0}};
    try {
        spectrum_counts(rec, beyond);
        FAIL("expected TruncationExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TruncationExceeded);
    }
    const std::vector<Interval> overlap{{0.0, 3.0}, {2.0, 4.0}};
    CHECK_THROWS_AS(spectrum_counts(rec, overlap), Error);
}
