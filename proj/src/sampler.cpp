#include "ribbonspec/sampler.hpp"

#include <cmath>
#include <numeric>

#include "ribbonspec/error.hpp"

namespace ribbonspec {

void SamplerConfig::validate() const
{
    if (genus < 1) throw Error(ErrorKind::InvalidArgument, "genus must be >= 1");
    if (!(boundary_total > 0.0)) throw Error(ErrorKind::InvalidArgument, "boundary length must be positive");
    if (rejection_budget == 0) throw Error(ErrorKind::InvalidArgument, "rejection budget must be positive");
}

PlantedTree remy_grow(int genus, PhiloxStream& rng)
{
    if (genus < 1) throw Error(ErrorKind::InvalidArgument, "genus must be >= 1");
    // Single edge 0-1 whose two ends are leaves.
    Permutation sigma{0, 1};
    Permutation alpha{1, 0};
    const int steps = 3 * genus - 2;
    sigma.reserve(2 + 4 * steps);
    alpha.reserve(2 + 4 * steps);
    for (int step = 0; step < steps; ++step) {
        const std::size_t edges = sigma.size() / 2;
        // Edges are indexed by their lower half-edge.
        HalfEdge pick = 0;
        {
            std::uint64_t target = rng.below(edges);
            for (HalfEdge h = 0; h < alpha.size(); ++h) {
                if (h < alpha[h] && target-- == 0) {
                    pick = h;
                    break;
                }
            }
        }
        const HalfEdge other = alpha[pick];
        const auto base = static_cast<HalfEdge>(sigma.size());
        const HalfEdge a = base, b = base + 1, c = base + 2, leaf = base + 3;
        sigma.insert(sigma.end(), {0, 0, 0, leaf});
        alpha.insert(alpha.end(), {0, 0, 0, 0});
        alpha[pick] = a;
        alpha[a] = pick;
        alpha[b] = other;
        alpha[other] = b;
        alpha[c] = leaf;
        alpha[leaf] = c;
        // New vertex (a b c) or (a c b): the pendant leaf goes on one side.
        if (rng.coin()) {
            sigma[a] = b, sigma[b] = c, sigma[c] = a;
        } else {
            sigma[a] = c, sigma[c] = b, sigma[b] = a;
        }
    }
    PlantedTree tree;
    tree.graph = HalfEdgeStructure::build(std::move(sigma), std::move(alpha));
    for (HalfEdge h = 0; h < tree.graph.half_edge_count(); ++h) {
        if (tree.graph.sigma()[h] == h) tree.leaves.push_back(h);
    }
    return tree;
}

HalfEdgeStructure merge_leaves(const PlantedTree& tree, PhiloxStream& rng, std::uint64_t budget,
                               std::uint64_t* rejections)
{
    if (tree.leaves.size() % 3 != 0) {
        throw Error(ErrorKind::InvalidArgument, "leaf count must be divisible by 3");
    }
    std::vector<HalfEdge> leaves = tree.leaves;
    Permutation sigma = tree.graph.sigma();
    const Permutation& alpha = tree.graph.alpha();
    for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
        shuffle(leaves.begin(), leaves.end(), rng);
        for (std::size_t i = 0; i < leaves.size(); i += 3) {
            const HalfEdge x = leaves[i], y = leaves[i + 1], z = leaves[i + 2];
            if (rng.coin()) {
                sigma[x] = y, sigma[y] = z, sigma[z] = x;
            } else {
                sigma[x] = z, sigma[z] = y, sigma[y] = x;
            }
        }
        if (count_faces(sigma, alpha) == 1) {
            if (rejections) *rejections = attempt;
            return HalfEdgeStructure::build(std::move(sigma), alpha);
        }
    }
    throw Error(ErrorKind::RejectionBudgetExceeded,
                "no one-faced merge after " + std::to_string(budget) + " attempts");
}

HalfEdgeStructure sample_unicellular(int genus, PhiloxStream& rng, std::uint64_t budget, std::uint64_t* rejections)
{
    if (genus < 1) throw Error(ErrorKind::InvalidArgument, "genus must be >= 1");
    const std::size_t n = 2 * (6 * static_cast<std::size_t>(genus) - 3);
    Permutation sigma(n);
    for (HalfEdge v = 0; v < n; v += 3) {
        sigma[v] = v + 1, sigma[v + 1] = v + 2, sigma[v + 2] = v;
    }
    std::vector<HalfEdge> order(n);
    Permutation alpha(n);
    for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
        std::iota(order.begin(), order.end(), HalfEdge{0});
        shuffle(order.begin(), order.end(), rng);
        for (std::size_t i = 0; i < n; i += 2) {
            alpha[order[i]] = order[i + 1];
            alpha[order[i + 1]] = order[i];
        }
        // One face implies connected.
        if (count_faces(sigma, alpha) == 1) {
            if (rejections) *rejections = attempt;
            return HalfEdgeStructure::build(std::move(sigma), std::move(alpha));
        }
    }
    throw Error(ErrorKind::RejectionBudgetExceeded,
                "no one-faced pairing after " + std::to_string(budget) + " attempts");
}

MetricMap sample_metric(const HalfEdgeStructure& graph, double boundary_total, PhiloxStream& rng)
{
    const std::size_t e = graph.edge_count();
    if (e == 0) throw Error(ErrorKind::InvalidArgument, "graph has no edges");
    if (!(boundary_total > 0.0)) throw Error(ErrorKind::InvalidArgument, "boundary length must be positive");
    std::vector<double> draws(e);
    for (int retry = 0; retry < 16; ++retry) {
        double sum = 0.0;
        for (auto& x : draws) {
            x = rng.exponential();
            sum += x;
        }
        if (sum > 0.0 && std::isfinite(sum)) {
            const double scale = 0.5 * boundary_total / sum;
            for (auto& x : draws) x *= scale;
            return MetricMap(graph, std::move(draws));
        }
    }
    throw Error(ErrorKind::DegenerateDraw, "exponential draws summed to zero repeatedly");
}

SampledMap sample_map(const SamplerConfig& cfg, std::uint32_t substream)
{
    cfg.validate();
    PhiloxStream rng(cfg.seed, cfg.trial_index, substream);
    std::uint64_t rejections = 0;
    HalfEdgeStructure graph;
    if (cfg.method == SamplerMethod::Remy) {
        const PlantedTree tree = remy_grow(cfg.genus, rng);
        graph = merge_leaves(tree, rng, cfg.rejection_budget, &rejections);
    } else {
        graph = sample_unicellular(cfg.genus, rng, cfg.rejection_budget, &rejections);
    }
    return SampledMap{sample_metric(graph, cfg.boundary_total, rng), rejections, substream};
}

}  // namespace ribbonspec
