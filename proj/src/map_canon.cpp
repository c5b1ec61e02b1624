#include "ribbonspec/map_canon.hpp"

#include <limits>

namespace ribbonspec {

std::vector<std::uint32_t> rooted_code(const HalfEdgeStructure& graph, HalfEdge root)
{
    constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
    const std::size_t n = graph.half_edge_count();
    const auto& sigma = graph.sigma();
    const auto& alpha = graph.alpha();
    std::vector<std::uint32_t> label(n, kUnset);
    std::vector<HalfEdge> order;
    order.reserve(n);
    auto visit_vertex = [&](HalfEdge start) {
        HalfEdge x = start;
        do {
            label[x] = static_cast<std::uint32_t>(order.size());
            order.push_back(x);
            x = sigma[x];
        } while (x != start);
    };
    visit_vertex(root);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const HalfEdge partner = alpha[order[i]];
        if (label[partner] == kUnset) visit_vertex(partner);
    }
    std::vector<std::uint32_t> code(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        code[i] = label[sigma[order[i]]];
        code[n + i] = label[alpha[order[i]]];
    }
    return code;
}

MapClass classify(const HalfEdgeStructure& graph)
{
    MapClass best;
    for (HalfEdge r = 0; r < graph.half_edge_count(); ++r) {
        auto code = rooted_code(graph, r);
        if (best.code.empty() || code < best.code) {
            best.code = std::move(code);
            best.automorphisms = 1;
        } else if (code == best.code) {
            ++best.automorphisms;
        }
    }
    return best;
}

}  // namespace ribbonspec
