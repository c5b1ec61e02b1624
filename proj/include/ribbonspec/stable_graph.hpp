#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ribbonspec/exact.hpp"
#include "ribbonspec/scaled_real.hpp"

namespace ribbonspec {

/// Half-edge view of a stable graph: half-edges 0..n-1 are the leaves
/// (label i + 1), then two per edge.  `involution` fixes exactly the leaves.
struct StableHalfEdges {
    std::vector<int> incidence;   ///< nu: half-edge -> vertex
    std::vector<int> involution;  ///< iota
    std::vector<int> leaf_label;  ///< 1..n on leaves, 0 elsewhere
};

/// Genus-decorated connected multigraph with labelled leaves.  Edges are
/// unordered vertex pairs stored as (min, max); u == v is a self-loop.
struct StableGraph {
    std::vector<int> vertex_genus;
    std::vector<int> leaf_vertex;  ///< leaf with label i + 1 sits on leaf_vertex[i]
    std::vector<std::array<int, 2>> edges;

    int vertex_count() const { return static_cast<int>(vertex_genus.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int leaf_count() const { return static_cast<int>(leaf_vertex.size()); }

    /// n_v: leaves plus edge ends at v (a self-loop contributes 2).
    std::vector<int> valencies() const;
    /// sum of g_v plus first Betti number |E| - |V| + 1.
    int genus() const;
    bool is_connected() const;
    bool is_stable() const;
    StableHalfEdges half_edges() const;

    friend bool operator==(const StableGraph&, const StableGraph&) = default;
};

/// Minimal serialisation over all vertex relabellings (edges sorted).
std::vector<int> canonical_code(const StableGraph& graph);

enum class AutMode {
    Full,            ///< bijections of vertices and half-edges
    EdgesLabelled,   ///< additionally fixing every edge (curves in a fixed order)
};

/// |Aut(Gamma)|.
std::uint64_t automorphism_count(const StableGraph& graph, AutMode mode = AutMode::Full);

struct EnumeratedGraph {
    StableGraph graph;
    std::uint64_t aut = 1;
};

/// One representative per isomorphism class of G_{g,n}, ordered by edge
/// count then canonical code.  SizeGuard unless g <= 5 and n <= 5.
std::vector<EnumeratedGraph> enumerate_stable_graphs(int g, int n);

bool is_separating(const StableGraph& graph);

/// F(n, k) = sum over compositions of n into k positive parts of
/// n_1! ... n_k! / n!.
Rational lemma_K_sum(int n, int k);

struct KKCheck {
    ScaledReal lhs;
    ScaledReal rhs;
    bool holds = false;
};

/// Both sides of the separating-graph bound on products of normalised
/// intersection asymptotics.  Throws NotSeparating.
KKCheck lemma_KK_check(const StableGraph& graph);

/// sqrt(g) / |Aut| * C^|E| / (2|E|)! * prod (2g_v-2+n_v)! / (2g-2+n)!.
/// Throws NotSeparating.
ScaledReal emleq_bound(const StableGraph& graph, std::uint64_t aut, double c);

/// Sum of emleq_bound over all separating graphs of type (g, n).
ScaledReal sum_emleq_bound(int g, int n, double c);

}  // namespace ribbonspec
