#include "ribbonspec/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "ribbonspec/error.hpp"

namespace ribbonspec {

namespace {

struct Arc {
    std::uint32_t edge;
    std::uint32_t to;
};

std::vector<std::vector<Arc>> adjacency(const HalfEdgeStructure& g)
{
    std::vector<std::vector<Arc>> adj(g.vertex_count());
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge_endpoints(e);
        if (u == v) continue;
        adj[u].push_back({e, v});
        adj[v].push_back({e, u});
    }
    return adj;
}

class CycleSearch {
public:
    CycleSearch(const MetricMap& map, double b_max, int d_max)
        : map_(map), adj_(adjacency(map.graph())), b_max_(b_max), d_max_(d_max),
          on_path_(map.graph().vertex_count(), 0)
    {
    }

    std::vector<Cycle> run()
    {
        const auto& g = map_.graph();
        for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
            const auto [u, v] = g.edge_endpoints(e);
            if (u == v && map_.length(e) < b_max_) out_.push_back(Cycle{{e}, {u}, map_.length(e)});
        }
        if (d_max_ >= 2) {
            for (std::uint32_t s = 0; s < g.vertex_count(); ++s) {
                start_ = s;
                vertices_.assign(1, s);
                on_path_[s] = 1;
                extend(s, 0.0);
                on_path_[s] = 0;
            }
        }
        for (auto& c : out_) c = canonical(c);
        std::sort(out_.begin(), out_.end(), [](const Cycle& x, const Cycle& y) {
            return x.length != y.length ? x.length < y.length : x.edges < y.edges;
        });
        return std::move(out_);
    }

private:
    void extend(std::uint32_t x, double length)
    {
        const int depth = static_cast<int>(edges_.size());
        for (const Arc& arc : adj_[x]) {
            const double next = length + map_.length(arc.edge);
            if (next >= b_max_) continue;
            if (arc.to == start_) {
                // Close the cycle; each cycle is met once per direction, keep
                // the direction whose first edge is smaller than its last.
                if (depth >= 1 && arc.edge != edges_.front() && edges_.front() < arc.edge) {
                    Cycle c;
                    c.edges = edges_;
                    c.edges.push_back(arc.edge);
                    c.vertices = vertices_;
                    c.length = next;
                    out_.push_back(std::move(c));
                }
                continue;
            }
            if (arc.to < start_ || on_path_[arc.to] || depth + 2 > d_max_) continue;
            on_path_[arc.to] = 1;
            edges_.push_back(arc.edge);
            vertices_.push_back(arc.to);
            extend(arc.to, next);
            vertices_.pop_back();
            edges_.pop_back();
            on_path_[arc.to] = 0;
        }
    }

    const MetricMap& map_;
    std::vector<std::vector<Arc>> adj_;
    double b_max_;
    int d_max_;
    std::vector<char> on_path_;
    std::uint32_t start_ = 0;
    std::vector<std::uint32_t> edges_;
    std::vector<std::uint32_t> vertices_;
    std::vector<Cycle> out_;
};

}  // namespace

Cycle canonical(const Cycle& cycle)
{
    const std::size_t k = cycle.edges.size();
    if (k <= 1) return cycle;
    const auto& e = cycle.edges;
    const auto& v = cycle.vertices;
    const std::size_t m = static_cast<std::size_t>(std::min_element(e.begin(), e.end()) - e.begin());
    // Distinct edges: the minimum starts the sequence; the smaller neighbour
    // of it decides the direction.
    const bool forward = e[(m + 1) % k] < e[(m + k - 1) % k];
    Cycle out;
    out.length = cycle.length;
    out.edges.resize(k);
    out.vertices.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (forward) {
            out.edges[i] = e[(m + i) % k];
            out.vertices[i] = v[(m + i) % k];
        } else {
            out.edges[i] = e[(m + k - i) % k];
            out.vertices[i] = v[(m + 1 + k - i) % k];
        }
    }
    // A 2-cycle reads the same edge sequence both ways; order its vertices.
    if (k == 2 && out.vertices[1] < out.vertices[0]) std::swap(out.vertices[0], out.vertices[1]);
    return out;
}

std::vector<Cycle> enumerate_cycles(const MetricMap& map, double b_max, int d_max)
{
    if (!(b_max > 0.0)) throw Error(ErrorKind::InvalidArgument, "b_max must be positive");
    if (d_max < 1) throw Error(ErrorKind::InvalidArgument, "d_max must be >= 1");
    return CycleSearch(map, b_max, d_max).run();
}

double girth(const MetricMap& map)
{
    const auto& g = map.graph();
    const std::size_t nv = g.vertex_count();
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge_endpoints(e);
        if (u == v) best = std::min(best, map.length(e));
    }
    const auto adj = adjacency(g);
    std::vector<double> dist(nv);
    using Item = std::pair<double, std::uint32_t>;
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge_endpoints(e);
        if (u == v) continue;
        const double budget = best - map.length(e);
        if (!(budget > 0.0)) continue;
        std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        dist[u] = 0.0;
        heap.push({0.0, u});
        while (!heap.empty()) {
            const auto [d, x] = heap.top();
            heap.pop();
            if (d > dist[x]) continue;
            if (d >= budget) break;
            if (x == v) {
                best = std::min(best, d + map.length(e));
                break;
            }
            for (const Arc& arc : adj[x]) {
                if (arc.edge == e) continue;
                const double nd = d + map.length(arc.edge);
                if (nd < dist[arc.to]) {
                    dist[arc.to] = nd;
                    heap.push({nd, arc.to});
                }
            }
        }
    }
    if (!std::isfinite(best)) throw Error(ErrorKind::Acyclic, "map has no cycle");
    return best;
}

SpectrumRecord make_spectrum(const MetricMap& map, double b_max, int d_max)
{
    SpectrumRecord rec;
    rec.b_max = b_max;
    rec.d_max = d_max;
    for (const auto& c : enumerate_cycles(map, b_max, d_max)) {
        rec.cycles.push_back({c.length, static_cast<int>(c.edge_count())});
    }
    rec.girth = girth(map);
    return rec;
}

std::vector<std::int64_t> spectrum_counts(const SpectrumRecord& rec, std::span<const Interval> intervals)
{
    check_disjoint(intervals);
    std::vector<std::int64_t> counts(intervals.size(), 0);
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (intervals[i].b > rec.b_max) {
            throw Error(ErrorKind::TruncationExceeded, "interval end " + std::to_string(intervals[i].b)
                                                           + " exceeds recorded b_max " + std::to_string(rec.b_max));
        }
        for (const auto& c : rec.cycles) counts[i] += intervals[i].contains(c.length) ? 1 : 0;
    }
    return counts;
}

}  // namespace ribbonspec
