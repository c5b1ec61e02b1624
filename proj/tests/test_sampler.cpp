#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "ribbonspec/error.hpp"
#include "ribbonspec/map_canon.hpp"
#include "ribbonspec/oracles.hpp"
#include "ribbonspec/sampler.hpp"
#include "ribbonspec/stats.hpp"

using namespace ribbonspec;

namespace {

/// Sets S of `size` pairwise non-adjacent vertices whose removal leaves the
/// graph connected: the ways a map arises as a tree with merged leaves.
int merge_vertex_sets(const HalfEdgeStructure& g, int size)
{
    const auto nv = static_cast<int>(g.vertex_count());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nv));
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge_endpoints(e);
        adj[u].push_back(static_cast<int>(v));
        adj[v].push_back(static_cast<int>(u));
    }
    int count = 0;
    for (int mask = 0; mask < (1 << nv); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != size) continue;
        bool independent = true;
        for (int v = 0; v < nv && independent; ++v) {
            if (!(mask >> v & 1)) continue;
            for (int u : adj[static_cast<std::size_t>(v)]) {
                if (mask >> u & 1) independent = false;
            }
        }
        if (!independent) continue;
        std::vector<char> seen(static_cast<std::size_t>(nv), 0);
        int start = 0;
        while (mask >> start & 1) ++start;
        std::vector<int> stack{start};
        seen[static_cast<std::size_t>(start)] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u : adj[static_cast<std::size_t>(v)]) {
                if ((mask >> u & 1) || seen[static_cast<std::size_t>(u)]) continue;
                seen[static_cast<std::size_t>(u)] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
        if (reached == nv - size) ++count;
    }
    return count;
}

HalfEdgeStructure from_code(const std::vector<std::uint32_t>& code)
{
    const std::size_t n = code.size() / 2;
    return HalfEdgeStructure::build(Permutation(code.begin(), code.begin() + static_cast<std::ptrdiff_t>(n)),
                                    Permutation(code.begin() + static_cast<std::ptrdiff_t>(n), code.end()));
}

std::vector<std::int64_t> class_histogram(const oracle::RootedLaw& law, SamplerMethod method, int genus,
                                          std::uint64_t samples, std::uint64_t seed)
{
    std::vector<std::int64_t> counts(law.class_codes.size(), 0);
    for (std::uint64_t t = 0; t < samples; ++t) {
        auto cfg = SamplerConfig::for_genus(genus, seed, t);
        cfg.method = method;
        const auto code = classify(sample_map(cfg).map.graph()).code;
        const auto it = std::lower_bound(law.class_codes.begin(), law.class_codes.end(), code);
        REQUIRE(it != law.class_codes.end());
        REQUIRE(*it == code);
        ++counts[static_cast<std::size_t>(it - law.class_codes.begin())];
    }
    return counts;
}

}  // namespace

TEST_CASE("Remy growth yields a planted trivalent tree")
{
    for (int genus = 1; genus <= 8; ++genus) {
        PhiloxStream rng(3, static_cast<std::uint64_t>(genus));
        const auto tree = remy_grow(genus, rng);
        const auto& g = tree.graph;
        CHECK(g.genus() == 0);
        CHECK(g.face_count() == 1);
        CHECK(g.edge_count() == static_cast<std::size_t>(6 * genus - 3));
        CHECK(tree.leaves.size() == static_cast<std::size_t>(3 * genus));
        CHECK(tree.leaves.front() == 0);
        CHECK(std::is_sorted(tree.leaves.begin(), tree.leaves.end()));
        std::size_t trivalent = 0;
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
            CHECK((g.valency(v) == 1 || g.valency(v) == 3));
            trivalent += g.valency(v) == 3;
        }
        CHECK(trivalent == static_cast<std::size_t>(3 * genus - 2));
    }
}

TEST_CASE("merging leaves gives a one-faced trivalent map")
{
    for (int genus = 1; genus <= 6; ++genus) {
        PhiloxStream rng(5, static_cast<std::uint64_t>(genus));
        const auto tree = remy_grow(genus, rng);
        std::uint64_t rejections = 0;
        const auto g = merge_leaves(tree, rng, 1'000'000, &rejections);
        CHECK(g.is_trivalent());
        CHECK(g.face_count() == 1);
        CHECK(g.vertex_count() == static_cast<std::size_t>(4 * genus - 2));
        CHECK(g.genus() == genus);
    }
}

TEST_CASE("every sample has the declared type")
{
    for (int genus : {1, 2, 3, 5, 10, 32}) {
        for (auto method : {SamplerMethod::Pairing, SamplerMethod::Remy}) {
            for (std::uint64_t t = 0; t < 10; ++t) {
                auto cfg = SamplerConfig::for_genus(genus, 8, t);
                cfg.method = method;
                const auto s = sample_map(cfg);
                const auto& g = s.map.graph();
                CHECK(g.is_trivalent());
                CHECK(g.face_count() == 1);
                CHECK(g.edge_count() == static_cast<std::size_t>(6 * genus - 3));
                CHECK(g.vertex_count() == static_cast<std::size_t>(4 * genus - 2));
                CHECK(g.genus() == genus);
                CHECK(s.map.total_edge_length() == doctest::Approx(cfg.boundary_total / 2).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("sample_map is deterministic in seed and trial")
{
    const auto a = sample_map(SamplerConfig::for_genus(4, 17, 3));
    const auto b = sample_map(SamplerConfig::for_genus(4, 17, 3));
    const auto c = sample_map(SamplerConfig::for_genus(4, 17, 4));
    CHECK(a.map == b.map);
    CHECK(a.rejections == b.rejections);
    CHECK_FALSE(a.map == c.map);
}

TEST_CASE("Dirichlet edge lengths: one coordinate's mean")
{
    constexpr int genus = 64;
    constexpr int trials = 1000;
    const double e = 6.0 * genus - 3.0;
    const double half = 12.0 * genus / 2.0;
    double sum = 0.0;
    for (int t = 0; t < trials; ++t) {
        PhiloxStream rng(21, static_cast<std::uint64_t>(t));
        const auto g = sample_unicellular(genus, rng);
        sum += sample_metric(g, 12.0 * genus, rng).length(0);
    }
    const double mean = half / e;
    CHECK(mean == doctest::Approx(384.0 / 381.0));
    const double sd = half * std::sqrt((e - 1.0) / (e * e * (e + 1.0)));
    CHECK(std::abs(sum / trials - mean) < 3.0 * sd / std::sqrt(double(trials)));
}

TEST_CASE("rejection budget")
{
    int thrown = 0;
    for (std::uint64_t t = 0; t < 40; ++t) {
        auto cfg = SamplerConfig::for_genus(6, 1, t);
        cfg.rejection_budget = 1;
        try {
            sample_map(cfg);
        } catch (const Error& err) {
            CHECK(err.kind() == ErrorKind::RejectionBudgetExceeded);
            ++thrown;
        }
    }
    CHECK(thrown > 20);
    auto bad = SamplerConfig::for_genus(0);
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("rooted law oracle reproduces the closed-form counts")
{
    CHECK(oracle::rooted_unicellular_count(1) == 1);
    CHECK(oracle::rooted_unicellular_count(2) == 105);
    CHECK(oracle::rooted_unicellular_count(3) == 50050);
    const auto g1 = oracle::rooted_unicellular_law(1);
    CHECK(g1.rooted_maps == 1);
    CHECK(g1.one_face_pairings == 3);
    CHECK(g1.automorphisms == std::vector<std::size_t>{6});
    const auto g2 = oracle::rooted_unicellular_law(2);
    CHECK(g2.rooted_maps == 105);
    CHECK(g2.class_codes.size() == 9);
    // |centralizer of the rotation| = 3^6 6! = 524880, times sum 1/|Aut| = 105/18.
    CHECK(g2.one_face_pairings == 3'061'800);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(g2.rooted_per_class[i] * g2.automorphisms[i] == 18);
        total += g2.rooted_per_class[i];
    }
    CHECK(total == 105);
}

TEST_CASE("pairing sampler is uniform over rooted maps at genus 2")
{
    const auto law = oracle::rooted_unicellular_law(2);
    const auto counts = class_histogram(law, SamplerMethod::Pairing, 2, 20000, 101);
    std::vector<double> p;
    for (auto c : law.rooted_per_class) p.push_back(static_cast<double>(c));
    CHECK(chi_square_test(counts, p).p_value > 0.001);
}

TEST_CASE("Remy merging is biased by the number of merge vertex sets")
{
    const auto law = oracle::rooted_unicellular_law(2);
    std::vector<double> remy_law, uniform;
    std::map<int, int> sizes;
    for (std::size_t i = 0; i < law.class_codes.size(); ++i) {
        const int sets = merge_vertex_sets(from_code(law.class_codes[i]), 2);
        ++sizes[sets];
        remy_law.push_back(static_cast<double>(sets * law.rooted_per_class[i]));
        uniform.push_back(static_cast<double>(law.rooted_per_class[i]));
    }
    CHECK(sizes.size() == 2);
    CHECK(sizes[4] == 5);
    CHECK(sizes[6] == 4);
    const auto counts = class_histogram(law, SamplerMethod::Remy, 2, 20000, 202);
    CHECK(chi_square_test(counts, remy_law).p_value > 0.001);
    CHECK(chi_square_test(counts, uniform).p_value < 1e-6);
}
