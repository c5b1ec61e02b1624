#pragma once

#include <cstdint>
#include <vector>

#include "ribbonspec/halfedge.hpp"
#include "ribbonspec/rng.hpp"

namespace ribbonspec {

/// A planted plane tree whose internal vertices are trivalent.  `leaves`
/// lists the half-edges sitting at 1-valent vertices in increasing order;
/// the planted root is the leaf at half-edge 0.
struct PlantedTree {
    HalfEdgeStructure graph;
    std::vector<HalfEdge> leaves;
};

enum class SamplerMethod {
    /// Uniform pairing of half-edges around a fixed trivalent rotation,
    /// retried until the map has one face.  Exactly uniform over labelled
    /// one-faced trivalent maps.
    Pairing,
    /// Rémy tree growth followed by merging leaves three at a time, retried
    /// until the map has one face.  Not uniform for genus >= 2.
    Remy,
};

struct SamplerConfig {
    int genus = 1;
    double boundary_total = 12.0;  ///< L; 12 * genus gives mean edge length 1.
    std::uint64_t seed = 0;
    std::uint64_t trial_index = 0;
    SamplerMethod method = SamplerMethod::Pairing;
    std::uint64_t rejection_budget = 1'000'000;

    static SamplerConfig for_genus(int genus, std::uint64_t seed = 0, std::uint64_t trial = 0)
    {
        SamplerConfig cfg;
        cfg.genus = genus;
        cfg.boundary_total = 12.0 * genus;
        cfg.seed = seed;
        cfg.trial_index = trial;
        return cfg;
    }
    double mu() const { return boundary_total / (12.0 * genus); }
    void validate() const;
};

struct SampledMap {
    MetricMap map;
    std::uint64_t rejections = 0;  ///< rejected one-face attempts
    std::uint32_t substream = 0;   ///< sub-stream that produced the map
};

PlantedTree remy_grow(int genus, PhiloxStream& rng);

/// Throws RejectionBudgetExceeded after `budget` failed attempts.
HalfEdgeStructure merge_leaves(const PlantedTree& tree, PhiloxStream& rng,
                               std::uint64_t budget = 1'000'000, std::uint64_t* rejections = nullptr);

/// Uniform one-faced trivalent map of the given genus (Pairing method).
HalfEdgeStructure sample_unicellular(int genus, PhiloxStream& rng, std::uint64_t budget = 1'000'000,
                                     std::uint64_t* rejections = nullptr);

/// Normalised exponentials: (2 l_i / L) is Dirichlet(1, ..., 1) and the
/// lengths sum to L / 2.
MetricMap sample_metric(const HalfEdgeStructure& graph, double boundary_total, PhiloxStream& rng);

/// Deterministic in (seed, trial_index): same inputs give the same map on
/// any thread, in any order.
SampledMap sample_map(const SamplerConfig& cfg, std::uint32_t substream = 0);

}  // namespace ribbonspec
