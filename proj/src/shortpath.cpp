#include "netsample/shortpath.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "netsample/detection.hpp"
#include "netsample/rng.hpp"
#include "netsample/samplers.hpp"

namespace netsample {

std::size_t ObservedGraph::node_count() const {
    std::unordered_set<NodeId> seen(sampled.begin(), sampled.end());
    for (NodeId v : sampled)
        for (NodeId w : base->neighbors(v)) seen.insert(w);
    return seen.size();
}

std::size_t ObservedGraph::edge_count() const {
    std::size_t count = 0;
    std::unordered_set<NodeId> counted;
    for (NodeId v : sampled) {
        for (NodeId w : base->neighbors(v)) {
            // Each edge once: from the smaller sampled endpoint, or from the
            // sampled one when the other is outside S.
            if (sampled.count(w)) {
                if (v < w) ++count;
            } else {
                ++count;
            }
        }
    }
    return count;
}

ObservedGraph observed_graph(const std::vector<const SampleStream*>& streams,
                             const Graph& g, const std::vector<NodeId>& extra_sampled) {
    if (streams.empty() && extra_sampled.empty())
        throw std::invalid_argument("observed_graph: nothing sampled");
    ObservedGraph og;
    og.base = &g;
    for (const SampleStream* s : streams)
        for (const NodeReply& r : s->samples) og.sampled.insert(r.node);
    for (NodeId v : extra_sampled) og.sampled.insert(v);
    return og;
}

std::vector<NodeId> observed_bfs_path(const ObservedGraph& og, NodeId from, NodeId to) {
    if (from == to) return {from};
    std::unordered_map<NodeId, NodeId> parent;
    std::queue<NodeId> q;
    parent[from] = from;
    q.push(from);
    while (!q.empty()) {
        NodeId a = q.front();
        q.pop();
        bool a_in_s = og.sampled.count(a) > 0;
        for (NodeId b : og.base->neighbors(a)) {  // sorted: smallest-id tie-break
            if (!a_in_s && !og.sampled.count(b)) continue;
            if (parent.count(b)) continue;
            parent[b] = a;
            if (b == to) {
                std::vector<NodeId> path{to};
                for (NodeId cur = to; cur != from;) {
                    cur = parent[cur];
                    path.push_back(cur);
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            q.push(b);
        }
    }
    return {};
}

std::size_t exact_distance(const Graph& g, NodeId from, NodeId to) {
    if (from == to) return 0;
    std::vector<std::int32_t> dist(g.node_count(), -1);
    std::queue<NodeId> q;
    dist[from] = 0;
    q.push(from);
    while (!q.empty()) {
        NodeId a = q.front();
        q.pop();
        for (NodeId b : g.neighbors(a)) {
            if (dist[b] >= 0) continue;
            dist[b] = dist[a] + 1;
            if (b == to) return static_cast<std::size_t>(dist[b]);
            q.push(b);
        }
    }
    return kUnreachable;
}

namespace {

void collect_sampled(const SampleStream& stream, std::vector<NodeId>& out) {
    for (const NodeReply& r : stream.samples) out.push_back(r.node);
}

}  // namespace

PathResult discover_short_path(const QueryContext& ctx, NodeId u, NodeId v,
                               std::size_t budget_b, PathStrategy strategy, double beta,
                               CostLedger& ledger, std::uint64_t seed) {
    const Graph& g = *ctx.graph;
    if (u == v) throw std::invalid_argument("discover_short_path: u == v");
    if (g.degree(u) == 0 || g.degree(v) == 0)
        throw std::invalid_argument("discover_short_path: endpoint is isolated");

    std::vector<NodeId> sampled{u, v};
    for (int side = 0; side < 2; ++side) {
        NodeId start = side == 0 ? u : v;
        std::uint64_t side_seed = derive_seed(seed, side);
        switch (strategy) {
            case PathStrategy::RW:
                collect_sampled(random_walk(ctx, ledger, start, budget_b, side_seed),
                                sampled);
                break;
            case PathStrategy::WRW:
                collect_sampled(weighted_random_walk(ctx, ledger, start, budget_b, beta,
                                                     false, side_seed),
                                sampled);
                break;
            case PathStrategy::MXS: {
                DetectionResult det = mxs_detect(ctx, start, 0, false, ledger, budget_b);
                sampled.insert(sampled.end(), det.sampled_set.begin(),
                               det.sampled_set.end());
                break;
            }
        }
    }

    ObservedGraph og;
    og.base = &g;
    og.sampled.insert(sampled.begin(), sampled.end());

    PathResult res;
    res.path = observed_bfs_path(og, u, v);
    if (!res.path.empty()) {
        res.found = true;
        res.d_star = res.path.size() - 1;
    }
    return res;
}

}  // namespace netsample
