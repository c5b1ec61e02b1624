#pragma once

#include <cstdint>
#include <vector>

#include "ribbonspec/halfedge.hpp"

namespace ribbonspec {

/// Relabelling of a ribbon graph obtained by a breadth-first walk from
/// `root`: whenever an unlabelled half-edge is reached through alpha, its
/// whole vertex is labelled in rotation order.  Two rooted maps are
/// isomorphic iff their codes coincide.  The code is the relabelled sigma
/// followed by the relabelled alpha.
std::vector<std::uint32_t> rooted_code(const HalfEdgeStructure& graph, HalfEdge root);

struct MapClass {
    std::vector<std::uint32_t> code;  ///< minimal rooted code over all roots
    std::size_t automorphisms = 0;    ///< roots attaining the minimum
};

/// Isomorphism class of an unrooted map; |Aut| counts orientation
/// preserving automorphisms (they act freely on half-edges).
MapClass classify(const HalfEdgeStructure& graph);

}  // namespace ribbonspec
