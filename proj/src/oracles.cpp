#include "ribbonspec/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "ribbonspec/error.hpp"
#include "ribbonspec/halfedge.hpp"
#include "ribbonspec/map_canon.hpp"

namespace ribbonspec::oracle {

namespace {

/// True iff the breadth-first relabelling from half-edge 0 is the identity,
/// i.e. the pairing is the canonical representative of its rooted map.
bool root_canonical(const std::vector<HalfEdge>& alpha)
{
    const std::size_t blocks = alpha.size() / 3;
    std::vector<char> seen(blocks, 0);
    seen[0] = 1;
    std::size_t next_block = 1;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const HalfEdge p = alpha[i];
        if (seen[p / 3]) continue;
        if (p != 3 * next_block) return false;
        seen[p / 3] = 1;
        ++next_block;
    }
    return true;
}

}  // namespace

RootedLaw rooted_unicellular_law(int genus)
{
    if (genus < 1 || genus > 2) throw Error(ErrorKind::SizeGuard, "rooted law enumerated for genus 1 and 2 only");
    const std::size_t n = static_cast<std::size_t>(12 * genus - 6);
    Permutation sigma(n);
    for (std::size_t v = 0; v < n / 3; ++v) {
        sigma[3 * v] = static_cast<HalfEdge>(3 * v + 1);
        sigma[3 * v + 1] = static_cast<HalfEdge>(3 * v + 2);
        sigma[3 * v + 2] = static_cast<HalfEdge>(3 * v);
    }
    constexpr HalfEdge kFree = ~HalfEdge{0};
    Permutation alpha(n, kFree);
    RootedLaw law;
    std::map<std::vector<std::uint32_t>, std::pair<std::uint64_t, std::size_t>> classes;
    std::function<void(std::size_t)> pair_from = [&](std::size_t i) {
        while (i < n && alpha[i] != kFree) ++i;
        if (i == n) {
            if (count_faces(sigma, alpha) != 1) return;
            ++law.one_face_pairings;
            if (!root_canonical(alpha)) return;
            ++law.rooted_maps;
            const MapClass mc = classify(HalfEdgeStructure::build(sigma, alpha));
            auto& slot = classes[mc.code];
            ++slot.first;
            slot.second = mc.automorphisms;
            return;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (alpha[j] != kFree) continue;
            alpha[i] = static_cast<HalfEdge>(j);
            alpha[j] = static_cast<HalfEdge>(i);
            pair_from(i + 1);
            alpha[i] = kFree;
            alpha[j] = kFree;
        }
    };
    pair_from(0);
    for (const auto& [code, info] : classes) {
        law.class_codes.push_back(code);
        law.rooted_per_class.push_back(info.first);
        law.automorphisms.push_back(info.second);
    }
    return law;
}

BigInt rooted_unicellular_count(int genus)
{
    return 2 * big_factorial(6 * genus - 3) /
           (boost::multiprecision::pow(BigInt(12), static_cast<unsigned>(genus)) * big_factorial(genus) *
            big_factorial(3 * genus - 2));
}

std::size_t stable_graph_class_count(int g, int n, bool separating_only)
{
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) throw Error(ErrorKind::InvalidArgument, "unstable type");
    std::set<std::vector<int>> seen;
    const int max_vertices = 2 * g - 2 + n;
    for (int nv = separating_only ? 2 : 1; nv <= max_vertices; ++nv) {
        const auto V = static_cast<std::size_t>(nv);
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::size_t u = 0; u < V; ++u) {
            for (std::size_t v = u; v < V; ++v) cells.emplace_back(u, v);
        }
        std::vector<int> genera(V, 0);
        std::vector<int> leaves(static_cast<std::size_t>(n), 0);
        std::vector<int> mult(cells.size(), 0);
        std::vector<std::size_t> perm(V);

        auto record = [&] {
            std::vector<std::vector<int>> m(V, std::vector<int>(V, 0));
            std::vector<int> valency(V, 0);
            for (int leaf : leaves) ++valency[static_cast<std::size_t>(leaf)];
            for (std::size_t c = 0; c < cells.size(); ++c) {
                const auto [u, v] = cells[c];
                m[u][v] = m[v][u] = mult[c];
                valency[u] += mult[c];
                valency[v] += mult[c];
            }
            for (std::size_t v = 0; v < V; ++v) {
                if (2 * genera[v] - 2 + valency[v] <= 0) return;
            }
            std::vector<std::size_t> parent(V);
            std::iota(parent.begin(), parent.end(), std::size_t{0});
            std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
                return parent[x] == x ? x : parent[x] = find(parent[x]);
            };
            for (std::size_t u = 0; u < V; ++u) {
                for (std::size_t v = u + 1; v < V; ++v) {
                    if (m[u][v] > 0) parent[find(u)] = find(v);
                }
            }
            for (std::size_t v = 1; v < V; ++v) {
                if (find(v) != find(0)) return;
            }
            std::iota(perm.begin(), perm.end(), std::size_t{0});
            std::vector<int> best;
            do {
                // perm[p] is the old vertex placed at position p.
                std::vector<std::size_t> pos(V);
                for (std::size_t p = 0; p < V; ++p) pos[perm[p]] = p;
                std::vector<int> code;
                for (std::size_t p = 0; p < V; ++p) code.push_back(genera[perm[p]]);
                for (int leaf : leaves) code.push_back(static_cast<int>(pos[static_cast<std::size_t>(leaf)]));
                for (std::size_t p = 0; p < V; ++p) {
                    for (std::size_t q = p; q < V; ++q) code.push_back(m[perm[p]][perm[q]]);
                }
                if (best.empty() || code < best) best = std::move(code);
            } while (std::next_permutation(perm.begin(), perm.end()));
            best.insert(best.begin(), nv);
            seen.insert(std::move(best));
        };

        std::function<void(std::size_t, int)> fill_edges = [&](std::size_t c, int left) {
            if (c + 1 == cells.size()) {
                mult[c] = left;
                record();
                return;
            }
            for (int k = 0; k <= left; ++k) {
                mult[c] = k;
                fill_edges(c + 1, left - k);
            }
        };
        std::function<void(std::size_t)> place_leaves = [&](std::size_t i) {
            if (i == leaves.size()) {
                const int genus_sum = std::accumulate(genera.begin(), genera.end(), 0);
                const int edges = g - genus_sum + nv - 1;
                if (edges < nv - 1) return;
                fill_edges(0, edges);
                return;
            }
            for (int v = 0; v < nv; ++v) {
                leaves[i] = v;
                place_leaves(i + 1);
            }
        };
        std::function<void(std::size_t, int)> choose_genera = [&](std::size_t v, int left) {
            if (v == V) {
                place_leaves(0);
                return;
            }
            for (int k = 0; k <= left; ++k) {
                genera[v] = k;
                choose_genera(v + 1, left - k);
            }
        };
        choose_genera(0, g);
    }
    return seen.size();
}

Rational genus0_volume(std::span<const Rational> boundary)
{
    const int n = static_cast<int>(boundary.size());
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "genus-zero volume needs n >= 3");
    const int top = n - 3;
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    Rational sum = 0;
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            if (left != 0) return;
            Rational term = Rational(big_factorial(top));
            for (int j = 0; j < n; ++j) {
                const int dj = d[static_cast<std::size_t>(j)];
                Rational power = 1;
                for (int k = 0; k < 2 * dj; ++k) power *= boundary[static_cast<std::size_t>(j)];
                const BigInt denom = big_factorial(dj) * big_factorial(dj) * (BigInt(1) << dj);
                term *= power / Rational(denom);
            }
            sum += term;
            return;
        }
        for (int k = 0; k <= left; ++k) {
            d[static_cast<std::size_t>(i)] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, top);
    return sum;
}

Rational composition_factorial_sum(int n, int k)
{
    if (k < 2 || k > n) throw Error(ErrorKind::InvalidArgument, "need 2 <= k <= n");
    std::vector<int> parts(static_cast<std::size_t>(k), 0);
    BigInt total = 0;
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == k - 1) {
            parts[static_cast<std::size_t>(i)] = left;
            BigInt prod = 1;
            for (int m : parts) prod *= big_factorial(m);
            total += prod;
            return;
        }
        for (int m = 1; m <= left - (k - 1 - i); ++m) {
            parts[static_cast<std::size_t>(i)] = m;
            rec(i + 1, left - m);
        }
    };
    rec(0, n);
    return Rational(total, big_factorial(n));
}

}  // namespace ribbonspec::oracle
