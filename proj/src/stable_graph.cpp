#include "ribbonspec/stable_graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "ribbonspec/error.hpp"

namespace ribbonspec {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix multiplicities(const StableGraph& g)
{
    const auto nv = static_cast<std::size_t>(g.vertex_count());
    Matrix m(nv, std::vector<int>(nv, 0));
    for (const auto& [u, v] : g.edges) {
        ++m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        if (u != v) ++m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
    }
    return m;
}

std::vector<int> rank_signatures(const std::vector<std::vector<int>>& sigs)
{
    std::vector<std::vector<int>> distinct = sigs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> out;
    out.reserve(sigs.size());
    for (const auto& s : sigs) {
        out.push_back(static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), s) - distinct.begin()));
    }
    return out;
}

/// Isomorphism-invariant vertex colours by iterated neighbourhood refinement.
std::vector<int> refined_colours(const StableGraph& g, const Matrix& m)
{
    const auto nv = static_cast<std::size_t>(g.vertex_count());
    const auto val = g.valencies();
    std::vector<std::vector<int>> sigs(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        sigs[v] = {g.vertex_genus[v], m[v][v], val[v]};
    }
    for (std::size_t i = 0; i < g.leaf_vertex.size(); ++i) {
        sigs[static_cast<std::size_t>(g.leaf_vertex[i])].push_back(static_cast<int>(i) + 1);
    }
    std::vector<int> colours = rank_signatures(sigs);
    std::size_t classes = std::set<int>(colours.begin(), colours.end()).size();
    while (true) {
        for (std::size_t v = 0; v < nv; ++v) {
            std::vector<std::pair<int, int>> around;
            for (std::size_t u = 0; u < nv; ++u) {
                if (u != v && m[v][u] > 0) around.emplace_back(colours[u], m[v][u]);
            }
            std::sort(around.begin(), around.end());
            sigs[v] = {colours[v]};
            for (const auto& [c, k] : around) {
                sigs[v].push_back(c);
                sigs[v].push_back(k);
            }
        }
        colours = rank_signatures(sigs);
        const std::size_t now = std::set<int>(colours.begin(), colours.end()).size();
        if (now == classes) break;
        classes = now;
    }
    return colours;
}

/// Calls `visit(order)` for every vertex ordering that lists colour classes
/// in increasing colour; `order[p]` is the vertex placed at position p.
void for_each_ordering(const std::vector<int>& colours, const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> order(colours.size());
    for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<int>(v);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return colours[static_cast<std::size_t>(a)] < colours[static_cast<std::size_t>(b)];
    });
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && colours[static_cast<std::size_t>(order[j])] == colours[static_cast<std::size_t>(order[i])]) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (b == blocks.size()) {
            visit(order);
            return;
        }
        auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
        auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
        std::sort(first, last);
        do {
            rec(b + 1);
        } while (std::next_permutation(first, last));
    };
    rec(0);
}

std::vector<int> code_for(const StableGraph& g, const Matrix& m, const std::vector<int>& order)
{
    const std::size_t nv = order.size();
    std::vector<int> position(nv);
    for (std::size_t p = 0; p < nv; ++p) position[static_cast<std::size_t>(order[p])] = static_cast<int>(p);
    std::vector<int> code{g.vertex_count(), g.edge_count(), g.leaf_count()};
    code.reserve(3 + nv + g.leaf_vertex.size() + nv * (nv + 1) / 2);
    for (std::size_t p = 0; p < nv; ++p) code.push_back(g.vertex_genus[static_cast<std::size_t>(order[p])]);
    for (int v : g.leaf_vertex) code.push_back(position[static_cast<std::size_t>(v)]);
    for (std::size_t p = 0; p < nv; ++p) {
        for (std::size_t q = p; q < nv; ++q) {
            code.push_back(m[static_cast<std::size_t>(order[p])][static_cast<std::size_t>(order[q])]);
        }
    }
    return code;
}

StableGraph graph_from_code(const std::vector<int>& code)
{
    StableGraph g;
    const int nv = code[0];
    const int ne = code[1];
    const int nl = code[2];
    std::size_t at = 3;
    g.vertex_genus.assign(code.begin() + 3, code.begin() + 3 + nv);
    at += static_cast<std::size_t>(nv);
    g.leaf_vertex.assign(code.begin() + static_cast<std::ptrdiff_t>(at),
                         code.begin() + static_cast<std::ptrdiff_t>(at) + nl);
    at += static_cast<std::size_t>(nl);
    for (int p = 0; p < nv; ++p) {
        for (int q = p; q < nv; ++q) {
            for (int k = 0; k < code[at]; ++k) g.edges.push_back({p, q});
            ++at;
        }
    }
    if (g.edge_count() != ne) throw std::logic_error("corrupt stable graph code");
    return g;
}

struct Canonical {
    std::vector<int> code;
    std::uint64_t vertex_automorphisms = 0;
};

Canonical canonicalize(const StableGraph& g)
{
    const Matrix m = multiplicities(g);
    const auto colours = refined_colours(g, m);
    Canonical best;
    for_each_ordering(colours, [&](const std::vector<int>& order) {
        auto code = code_for(g, m, order);
        if (best.code.empty() || code < best.code) {
            best.code = std::move(code);
            best.vertex_automorphisms = 1;
        } else if (code == best.code) {
            ++best.vertex_automorphisms;
        }
    });
    return best;
}

std::uint64_t small_factorial(int k)
{
    std::uint64_t out = 1;
    for (int i = 2; i <= k; ++i) out *= static_cast<std::uint64_t>(i);
    return out;
}

/// All graphs obtained by inserting one edge: a self-loop at a vertex of
/// positive genus, or a splitting of a vertex into two joined vertices.
std::vector<StableGraph> degenerations(const StableGraph& g)
{
    std::vector<StableGraph> out;
    const int nv = g.vertex_count();
    for (int v = 0; v < nv; ++v) {
        if (g.vertex_genus[static_cast<std::size_t>(v)] >= 1) {
            StableGraph h = g;
            --h.vertex_genus[static_cast<std::size_t>(v)];
            h.edges.push_back({v, v});
            out.push_back(std::move(h));
        }
        // Ends at v: leaves (kind 0, index) and edge sides (kind 1, edge, side).
        struct End {
            int kind, index, side;
        };
        std::vector<End> ends;
        for (int i = 0; i < g.leaf_count(); ++i) {
            if (g.leaf_vertex[static_cast<std::size_t>(i)] == v) ends.push_back({0, i, 0});
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            for (int side = 0; side < 2; ++side) {
                if (g.edges[static_cast<std::size_t>(e)][static_cast<std::size_t>(side)] == v) ends.push_back({1, e, side});
            }
        }
        const int k = static_cast<int>(ends.size());
        const int gv = g.vertex_genus[static_cast<std::size_t>(v)];
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            const int moved = std::popcount(mask);
            for (int gw = 0; gw <= gv; ++gw) {
                if (2 * gw - 2 + moved + 1 <= 0) continue;
                if (2 * (gv - gw) - 2 + (k - moved) + 1 <= 0) continue;
                StableGraph h = g;
                const int w = nv;
                h.vertex_genus.push_back(gw);
                h.vertex_genus[static_cast<std::size_t>(v)] = gv - gw;
                for (int i = 0; i < k; ++i) {
                    if (!(mask & (1u << i))) continue;
                    const End& end = ends[static_cast<std::size_t>(i)];
                    if (end.kind == 0) {
                        h.leaf_vertex[static_cast<std::size_t>(end.index)] = w;
                    } else {
                        h.edges[static_cast<std::size_t>(end.index)][static_cast<std::size_t>(end.side)] = w;
                    }
                }
                for (auto& edge : h.edges) {
                    if (edge[0] > edge[1]) std::swap(edge[0], edge[1]);
                }
                h.edges.push_back({v, w});
                out.push_back(std::move(h));
            }
        }
    }
    return out;
}

ScaledReal normalized_term(int g, int n)
{
    return double_factorial(6 * g - 5 + 2 * n) / (factorial(g) * pow(ScaledReal(24.0), g));
}

}  // namespace

std::vector<int> StableGraph::valencies() const
{
    std::vector<int> val(vertex_genus.size(), 0);
    for (int v : leaf_vertex) ++val[static_cast<std::size_t>(v)];
    for (const auto& [u, v] : edges) {
        ++val[static_cast<std::size_t>(u)];
        ++val[static_cast<std::size_t>(v)];
    }
    return val;
}

int StableGraph::genus() const
{
    int sum = 0;
    for (int gv : vertex_genus) sum += gv;
    return sum + edge_count() - vertex_count() + 1;
}

bool StableGraph::is_connected() const
{
    const auto nv = static_cast<std::size_t>(vertex_count());
    if (nv == 0) return false;
    std::vector<int> parent(nv);
    for (std::size_t i = 0; i < nv; ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    std::size_t components = nv;
    for (const auto& [u, v] : edges) {
        const int a = find(u), b = find(v);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components == 1;
}

bool StableGraph::is_stable() const
{
    const auto val = valencies();
    for (std::size_t v = 0; v < vertex_genus.size(); ++v) {
        if (vertex_genus[v] < 0 || 2 * vertex_genus[v] - 2 + val[v] <= 0) return false;
    }
    return true;
}

StableHalfEdges StableGraph::half_edges() const
{
    StableHalfEdges h;
    const int n = leaf_count();
    for (int i = 0; i < n; ++i) {
        h.incidence.push_back(leaf_vertex[static_cast<std::size_t>(i)]);
        h.involution.push_back(i);
        h.leaf_label.push_back(i + 1);
    }
    for (const auto& [u, v] : edges) {
        const int a = static_cast<int>(h.incidence.size());
        h.incidence.push_back(u);
        h.incidence.push_back(v);
        h.involution.push_back(a + 1);
        h.involution.push_back(a);
        h.leaf_label.push_back(0);
        h.leaf_label.push_back(0);
    }
    return h;
}

std::vector<int> canonical_code(const StableGraph& graph)
{
    return canonicalize(graph).code;
}

std::uint64_t automorphism_count(const StableGraph& graph, AutMode mode)
{
    const Matrix m = multiplicities(graph);
    const auto nv = static_cast<std::size_t>(graph.vertex_count());
    if (mode == AutMode::Full) {
        std::uint64_t out = canonicalize(graph).vertex_automorphisms;
        for (std::size_t u = 0; u < nv; ++u) {
            out *= (std::uint64_t{1} << m[u][u]) * small_factorial(m[u][u]);
            for (std::size_t v = u + 1; v < nv; ++v) out *= small_factorial(m[u][v]);
        }
        return out;
    }
    // Vertex maps fixing every edge; each self-loop may still be flipped.
    const auto colours = refined_colours(graph, m);
    const auto identity_code = code_for(graph, m, [&] {
        std::vector<int> id(nv);
        for (std::size_t v = 0; v < nv; ++v) id[v] = static_cast<int>(v);
        return id;
    }());
    std::uint64_t vertex_maps = 0;
    for_each_ordering(colours, [&](const std::vector<int>& order) {
        // order[p] = vertex sent to p, i.e. the map pi(order[p]) = p.
        std::vector<int> pi(nv);
        for (std::size_t p = 0; p < nv; ++p) pi[static_cast<std::size_t>(order[p])] = static_cast<int>(p);
        for (const auto& [u, v] : graph.edges) {
            const int a = pi[static_cast<std::size_t>(u)], b = pi[static_cast<std::size_t>(v)];
            if (!((a == u && b == v) || (a == v && b == u))) return;
        }
        if (code_for(graph, m, order) == identity_code) ++vertex_maps;
    });
    std::uint64_t loops = 0;
    for (std::size_t u = 0; u < nv; ++u) loops += static_cast<std::uint64_t>(m[u][u]);
    return vertex_maps << loops;
}

std::vector<EnumeratedGraph> enumerate_stable_graphs(int g, int n)
{
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) {
        throw Error(ErrorKind::InvalidArgument, "unstable type (" + std::to_string(g) + "," + std::to_string(n) + ")");
    }
    if (g > 5 || n > 5) throw Error(ErrorKind::SizeGuard, "enumeration limited to g <= 5, n <= 5");
    StableGraph root;
    root.vertex_genus = {g};
    root.leaf_vertex.assign(static_cast<std::size_t>(n), 0);

    std::map<std::vector<int>, std::uint64_t> all;
    std::vector<StableGraph> level{root};
    const auto rc = canonicalize(root);
    all.emplace(rc.code, rc.vertex_automorphisms);
    level = {graph_from_code(rc.code)};
    const int max_edges = 3 * g - 3 + n;
    for (int e = 1; e <= max_edges && !level.empty(); ++e) {
        std::map<std::vector<int>, std::uint64_t> next;
        for (const auto& graph : level) {
            for (const auto& child : degenerations(graph)) {
                auto c = canonicalize(child);
                next.emplace(std::move(c.code), c.vertex_automorphisms);
            }
        }
        level.clear();
        for (const auto& [code, aut] : next) {
            level.push_back(graph_from_code(code));
            all.emplace(code, aut);
        }
    }
    std::vector<EnumeratedGraph> out;
    out.reserve(all.size());
    for (const auto& [code, vertex_aut] : all) {
        EnumeratedGraph eg{graph_from_code(code), vertex_aut};
        const Matrix m = multiplicities(eg.graph);
        for (std::size_t u = 0; u < m.size(); ++u) {
            eg.aut *= (std::uint64_t{1} << m[u][u]) * small_factorial(m[u][u]);
            for (std::size_t v = u + 1; v < m.size(); ++v) eg.aut *= small_factorial(m[u][v]);
        }
        out.push_back(std::move(eg));
    }
    std::stable_sort(out.begin(), out.end(), [](const EnumeratedGraph& a, const EnumeratedGraph& b) {
        return a.graph.edge_count() < b.graph.edge_count();
    });
    return out;
}

bool is_separating(const StableGraph& graph)
{
    return graph.vertex_count() >= 2;
}

Rational lemma_K_sum(int n, int k)
{
    if (k < 2 || k > n) throw Error(ErrorKind::InvalidArgument, "lemma_K_sum needs 2 <= k <= n");
    // ways[j][m] = sum over compositions of m into j positive parts of prod m_i!.
    std::vector<BigInt> fact(static_cast<std::size_t>(n) + 1);
    fact[0] = 1;
    for (int i = 1; i <= n; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;
    std::vector<BigInt> ways(static_cast<std::size_t>(n) + 1, 0);
    for (int m = 1; m <= n; ++m) ways[static_cast<std::size_t>(m)] = fact[static_cast<std::size_t>(m)];
    for (int j = 2; j <= k; ++j) {
        std::vector<BigInt> next(static_cast<std::size_t>(n) + 1, 0);
        for (int m = j; m <= n; ++m) {
            for (int last = 1; last <= m - (j - 1); ++last) {
                next[static_cast<std::size_t>(m)] += ways[static_cast<std::size_t>(m - last)] * fact[static_cast<std::size_t>(last)];
            }
        }
        ways = std::move(next);
    }
    return Rational(ways[static_cast<std::size_t>(n)], fact[static_cast<std::size_t>(n)]);
}

KKCheck lemma_KK_check(const StableGraph& graph)
{
    if (!is_separating(graph)) throw Error(ErrorKind::NotSeparating, "the product bound needs at least two vertices");
    const int g = graph.genus();
    const int n = graph.leaf_count();
    const auto val = graph.valencies();
    ScaledReal lhs(1.0);
    ScaledReal product_chi(1.0);
    for (std::size_t v = 0; v < val.size(); ++v) {
        lhs *= normalized_term(graph.vertex_genus[v], val[v]);
        product_chi *= factorial(2 * graph.vertex_genus[v] - 2 + val[v]);
    }
    lhs /= normalized_term(g, n);
    const int exponent = 2 - graph.vertex_count() + graph.edge_count();
    const ScaledReal rhs = pow(ScaledReal(4.0), exponent) / factorial(2 * g - 2 + n) * product_chi;
    return {lhs, rhs, lhs <= rhs * ScaledReal(1.0 + 1e-12)};
}

ScaledReal emleq_bound(const StableGraph& graph, std::uint64_t aut, double c)
{
    if (!is_separating(graph)) throw Error(ErrorKind::NotSeparating, "bound defined on separating graphs");
    if (!(c > 0.0) || aut == 0) throw Error(ErrorKind::InvalidArgument, "need C > 0 and |Aut| >= 1");
    const int g = graph.genus();
    const int n = graph.leaf_count();
    const int e = graph.edge_count();
    const auto val = graph.valencies();
    ScaledReal out = ScaledReal(std::sqrt(static_cast<double>(g))) / ScaledReal(static_cast<double>(aut));
    out *= pow(ScaledReal(c), e) / factorial(2 * e);
    for (std::size_t v = 0; v < val.size(); ++v) out *= factorial(2 * graph.vertex_genus[v] - 2 + val[v]);
    return out / factorial(2 * g - 2 + n);
}

ScaledReal sum_emleq_bound(int g, int n, double c)
{
    ScaledReal sum;
    for (const auto& eg : enumerate_stable_graphs(g, n)) {
        if (is_separating(eg.graph)) sum += emleq_bound(eg.graph, eg.aut, c);
    }
    return sum;
}

}  // namespace ribbonspec
