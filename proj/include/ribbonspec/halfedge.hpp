#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ribbonspec {

using HalfEdge = std::uint32_t;
using Permutation = std::vector<HalfEdge>;

/// A ribbon graph given by two permutations of the half-edges: the
/// counterclockwise rotation `sigma` around each vertex and the fixed-point
/// free involution `alpha` pairing the two halves of each edge.  Faces are
/// the orbits of sigma∘alpha (apply alpha first).
///
/// Vertex and edge ids are assigned in order of first occurrence when
/// scanning half-edges 0, 1, 2, ...  Instances are immutable.
class HalfEdgeStructure {
public:
    HalfEdgeStructure() = default;

    /// Validates and indexes.  Throws NotPermutation, NotInvolution or
    /// Disconnected.
    static HalfEdgeStructure build(Permutation sigma, Permutation alpha);

    std::size_t half_edge_count() const { return sigma_.size(); }
    std::size_t edge_count() const { return sigma_.size() / 2; }
    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t face_count() const { return face_count_; }

    const Permutation& sigma() const { return sigma_; }
    const Permutation& alpha() const { return alpha_; }

    std::uint32_t edge_of(HalfEdge h) const { return edge_index_[h]; }
    std::uint32_t vertex_of(HalfEdge h) const { return vertex_index_[h]; }

    /// Half-edges of edge `e`; the first one is the lower index.
    std::array<HalfEdge, 2> edge_half_edges(std::uint32_t e) const;
    /// Vertex ids of the two ends of edge `e` (equal for a self-loop).
    std::array<std::uint32_t, 2> edge_endpoints(std::uint32_t e) const;

    std::size_t valency(std::uint32_t vertex) const { return valency_[vertex]; }
    std::size_t min_valency() const;
    bool is_trivalent() const;

    /// Face orbits sorted by their minimal half-edge; each orbit starts at
    /// its minimal half-edge and follows sigma∘alpha.
    std::vector<std::vector<HalfEdge>> faces() const;

    /// (2 - V + E - F) / 2; throws InvalidEuler if odd or negative.
    int genus() const;

    /// Gate for spectrum experiments: every vertex of valency >= `minimum`.
    void require_min_valency(std::size_t minimum) const;

    friend bool operator==(const HalfEdgeStructure& a, const HalfEdgeStructure& b)
    {
        return a.sigma_ == b.sigma_ && a.alpha_ == b.alpha_;
    }

private:
    Permutation sigma_;
    Permutation alpha_;
    std::vector<std::uint32_t> edge_index_;
    std::vector<std::uint32_t> vertex_index_;
    std::vector<HalfEdge> edge_first_;
    std::vector<std::uint32_t> valency_;
    std::size_t vertex_count_ = 0;
    std::size_t face_count_ = 0;
};

/// Number of orbits of sigma∘alpha without building a full structure.
std::size_t count_faces(std::span<const HalfEdge> sigma, std::span<const HalfEdge> alpha);

/// A ribbon graph with one positive length per edge id.
class MetricMap {
public:
    MetricMap() = default;
    /// Throws InvalidArgument on a size mismatch or a non-positive length.
    MetricMap(HalfEdgeStructure graph, std::vector<double> lengths);

    const HalfEdgeStructure& graph() const { return graph_; }
    const std::vector<double>& lengths() const { return lengths_; }
    double length(std::uint32_t edge) const { return lengths_[edge]; }
    double total_edge_length() const;

    friend bool operator==(const MetricMap&, const MetricMap&) = default;

private:
    HalfEdgeStructure graph_;
    std::vector<double> lengths_;
};

/// Boundary length of each face, in the order of HalfEdgeStructure::faces().
std::vector<double> face_lengths(const MetricMap& map);

/// `sigma: a0 a1 ...\nalpha: b0 b1 ...\n`
std::string to_text(const HalfEdgeStructure& graph);
HalfEdgeStructure parse_text(const std::string& text);

}  // namespace ribbonspec
