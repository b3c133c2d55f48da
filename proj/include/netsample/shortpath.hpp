#ifndef NETSAMPLE_SHORTPATH_HPP
#define NETSAMPLE_SHORTPATH_HPP

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "netsample/access.hpp"
#include "netsample/ledger.hpp"
#include "netsample/stream.hpp"

namespace netsample {

// The subgraph revealed by a set of sampled nodes S: V* = S + N(S), E* = all
// edges with at least one endpoint in S. Kept implicit against the base
// graph, membership in S decides which edges exist.
struct ObservedGraph {
    const Graph* base = nullptr;
    std::unordered_set<NodeId> sampled;  // S

    bool has_edge(NodeId u, NodeId v) const {
        return (sampled.count(u) || sampled.count(v)) && base->has_edge(u, v);
    }
    std::size_t node_count() const;  // |S + N(S)|
    std::size_t edge_count() const;  // |E*|
};

ObservedGraph observed_graph(const std::vector<const SampleStream*>& streams,
                             const Graph& g,
                             const std::vector<NodeId>& extra_sampled = {});

constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);

struct PathResult {
    bool found = false;
    std::vector<NodeId> path;  // u..v when found
    std::size_t d_star = kUnreachable;
    std::optional<std::size_t> true_d;  // oracle-filled by the harness
};

enum class PathStrategy { RW, WRW, MXS };

// Runs the strategy from u and from v with budget B each, merges the sampled
// sets, and BFSes the observed graph. For MXS, B counts greedy node
// additions so budgets stay comparable across strategies.
PathResult discover_short_path(const QueryContext& ctx, NodeId u, NodeId v,
                               std::size_t budget_b, PathStrategy strategy, double beta,
                               CostLedger& ledger, std::uint64_t seed);

// Deterministic BFS shortest path in the observed graph (smallest-id
// tie-break). Empty result when disconnected.
std::vector<NodeId> observed_bfs_path(const ObservedGraph& og, NodeId from, NodeId to);

// Oracle: exact BFS distance in the full graph; kUnreachable if none.
std::size_t exact_distance(const Graph& g, NodeId from, NodeId to);

}  // namespace netsample

#endif
