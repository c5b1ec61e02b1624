#include "ribbonspec/halfedge.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "ribbonspec/error.hpp"

namespace ribbonspec {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

void check_permutation(const Permutation& p, const char* name)
{
    std::vector<char> hit(p.size(), 0);
    for (HalfEdge x : p) {
        if (x >= p.size() || hit[x]) {
            throw Error(ErrorKind::NotPermutation, std::string(name) + " is not a permutation");
        }
        hit[x] = 1;
    }
}

}  // namespace

HalfEdgeStructure HalfEdgeStructure::build(Permutation sigma, Permutation alpha)
{
    if (sigma.size() != alpha.size()) {
        throw Error(ErrorKind::NotPermutation, "sigma and alpha act on different sets");
    }
    if (sigma.size() % 2 != 0) {
        throw Error(ErrorKind::NotInvolution, "odd number of half-edges");
    }
    check_permutation(sigma, "sigma");
    check_permutation(alpha, "alpha");
    const std::size_t n = sigma.size();
    for (HalfEdge h = 0; h < n; ++h) {
        if (alpha[h] == h || alpha[alpha[h]] != h) {
            throw Error(ErrorKind::NotInvolution,
                        "alpha is not a fixed-point-free involution at half-edge " + std::to_string(h));
        }
    }

    HalfEdgeStructure g;
    g.sigma_ = std::move(sigma);
    g.alpha_ = std::move(alpha);
    g.edge_index_.assign(n, kUnset);
    g.vertex_index_.assign(n, kUnset);
    g.edge_first_.reserve(n / 2);

    std::uint32_t next_edge = 0;
    std::uint32_t next_vertex = 0;
    for (HalfEdge h = 0; h < n; ++h) {
        if (g.edge_index_[h] == kUnset) {
            g.edge_index_[h] = next_edge;
            g.edge_index_[g.alpha_[h]] = next_edge;
            g.edge_first_.push_back(h);
            ++next_edge;
        }
        if (g.vertex_index_[h] == kUnset) {
            std::uint32_t size = 0;
            for (HalfEdge x = h; g.vertex_index_[x] == kUnset; x = g.sigma_[x]) {
                g.vertex_index_[x] = next_vertex;
                ++size;
            }
            g.valency_.push_back(size);
            ++next_vertex;
        }
    }
    g.vertex_count_ = next_vertex;

    if (n > 0) {
        std::vector<char> seen(n, 0);
        std::vector<HalfEdge> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            HalfEdge h = stack.back();
            stack.pop_back();
            for (HalfEdge x : {g.sigma_[h], g.alpha_[h]}) {
                if (!seen[x]) {
                    seen[x] = 1;
                    ++reached;
                    stack.push_back(x);
                }
            }
        }
        if (reached != n) {
            throw Error(ErrorKind::Disconnected, "<sigma, alpha> is not transitive");
        }
    }
    g.face_count_ = count_faces(g.sigma_, g.alpha_);
    return g;
}

std::size_t count_faces(std::span<const HalfEdge> sigma, std::span<const HalfEdge> alpha)
{
    const std::size_t n = sigma.size();
    std::vector<char> seen(n, 0);
    std::size_t faces = 0;
    for (HalfEdge h = 0; h < n; ++h) {
        if (seen[h]) continue;
        ++faces;
        for (HalfEdge x = h; !seen[x]; x = sigma[alpha[x]]) seen[x] = 1;
    }
    return faces;
}

std::array<HalfEdge, 2> HalfEdgeStructure::edge_half_edges(std::uint32_t e) const
{
    const HalfEdge h = edge_first_[e];
    return {h, alpha_[h]};
}

std::array<std::uint32_t, 2> HalfEdgeStructure::edge_endpoints(std::uint32_t e) const
{
    const auto [a, b] = edge_half_edges(e);
    return {vertex_index_[a], vertex_index_[b]};
}

std::size_t HalfEdgeStructure::min_valency() const
{
    if (valency_.empty()) return 0;
    return *std::min_element(valency_.begin(), valency_.end());
}

bool HalfEdgeStructure::is_trivalent() const
{
    return !valency_.empty() && std::all_of(valency_.begin(), valency_.end(), [](auto v) { return v == 3; });
}

std::vector<std::vector<HalfEdge>> HalfEdgeStructure::faces() const
{
    const std::size_t n = half_edge_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<HalfEdge>> out;
    out.reserve(face_count_);
    for (HalfEdge h = 0; h < n; ++h) {
        if (seen[h]) continue;
        auto& orbit = out.emplace_back();
        for (HalfEdge x = h; !seen[x]; x = sigma_[alpha_[x]]) {
            seen[x] = 1;
            orbit.push_back(x);
        }
    }
    return out;
}

int HalfEdgeStructure::genus() const
{
    const long twice = 2 - static_cast<long>(vertex_count_) + static_cast<long>(edge_count())
                       - static_cast<long>(face_count_);
    if (twice < 0 || twice % 2 != 0) {
        throw Error(ErrorKind::InvalidEuler, "V - E + F = " + std::to_string(2 - twice));
    }
    return static_cast<int>(twice / 2);
}

void HalfEdgeStructure::require_min_valency(std::size_t minimum) const
{
    if (min_valency() < minimum) {
        throw Error(ErrorKind::InvalidArgument,
                    "vertex of valency " + std::to_string(min_valency()) + " < " + std::to_string(minimum));
    }
}

MetricMap::MetricMap(HalfEdgeStructure graph, std::vector<double> lengths)
    : graph_(std::move(graph)), lengths_(std::move(lengths))
{
    if (lengths_.size() != graph_.edge_count()) {
        throw Error(ErrorKind::InvalidArgument, "one length per edge required");
    }
    for (double l : lengths_) {
        if (!(l > 0.0)) throw Error(ErrorKind::InvalidArgument, "edge lengths must be positive");
    }
}

double MetricMap::total_edge_length() const
{
    return std::accumulate(lengths_.begin(), lengths_.end(), 0.0);
}

std::vector<double> face_lengths(const MetricMap& map)
{
    std::vector<double> out;
    for (const auto& orbit : map.graph().faces()) {
        double sum = 0.0;
        for (HalfEdge h : orbit) sum += map.length(map.graph().edge_of(h));
        out.push_back(sum);
    }
    return out;
}

std::string to_text(const HalfEdgeStructure& graph)
{
    std::ostringstream os;
    os << "sigma:";
    for (HalfEdge x : graph.sigma()) os << ' ' << x;
    os << "\nalpha:";
    for (HalfEdge x : graph.alpha()) os << ' ' << x;
    os << '\n';
    return os.str();
}

HalfEdgeStructure parse_text(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    Permutation sigma, alpha;
    bool have_sigma = false, have_alpha = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        Permutation* target = nullptr;
        if (tag == "sigma:") {
            target = &sigma;
            have_sigma = true;
        } else if (tag == "alpha:") {
            target = &alpha;
            have_alpha = true;
        } else if (tag.empty()) {
            continue;
        } else {
            throw Error(ErrorKind::InvalidArgument, "unexpected line: " + line);
        }
        long long v;
        while (ls >> v) {
            if (v < 0) throw Error(ErrorKind::NotPermutation, "negative half-edge index");
            target->push_back(static_cast<HalfEdge>(v));
        }
    }
    if (!have_sigma || !have_alpha) throw Error(ErrorKind::InvalidArgument, "missing sigma or alpha line");
    return HalfEdgeStructure::build(std::move(sigma), std::move(alpha));
}

}  // namespace ribbonspec
