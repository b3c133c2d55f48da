#ifndef NETSAMPLE_GRAPH_HPP
#define NETSAMPLE_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netsample {

using NodeId = std::int32_t;
using Edge = std::pair<NodeId, NodeId>;

struct BuildStats {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_dropped = 0;
};

// Immutable adjacency structure. Directed graphs keep separate in/out lists
// plus an undirected view where opposite-direction pairs collapse to one edge.
// Neighbor lists are sorted, so membership tests are logarithmic and all
// outputs are deterministic.
class Graph {
public:
    Graph() = default;

    // Builds from a directed edge list (or symmetric pairs when
    // directed=false). Self-loops and duplicate edges are dropped and
    // counted in `stats`.
    static Graph from_edges(NodeId node_count, std::vector<Edge> edges,
                            bool directed, BuildStats* stats = nullptr);

    NodeId node_count() const { return static_cast<NodeId>(und_adj_.size()); }
    bool directed() const { return directed_; }

    // |E| on the undirected view.
    std::size_t edge_count() const { return edge_count_und_; }
    // |E_d|; equals |E| for undirected graphs.
    std::size_t directed_edge_count() const { return edge_count_dir_; }

    std::span<const NodeId> neighbors(NodeId v) const { return und_adj_[v]; }
    std::span<const NodeId> out_neighbors(NodeId v) const { return out_adj_[v]; }
    std::span<const NodeId> in_neighbors(NodeId v) const { return in_adj_[v]; }

    int degree(NodeId v) const { return static_cast<int>(und_adj_[v].size()); }
    int out_degree(NodeId v) const { return static_cast<int>(out_adj_[v].size()); }
    int in_degree(NodeId v) const { return static_cast<int>(in_adj_[v].size()); }

    bool has_edge(NodeId u, NodeId v) const;           // undirected view
    bool has_directed_edge(NodeId u, NodeId v) const;  // u -> v

    // Reciprocity multiplicity: 0 if v is not a neighbor of u, 2 if v is
    // both an in- and out-neighbor of u, 1 otherwise.
    int psi(NodeId u, NodeId v) const;

private:
    bool directed_ = false;
    std::size_t edge_count_und_ = 0;
    std::size_t edge_count_dir_ = 0;
    std::vector<std::vector<NodeId>> out_adj_;
    std::vector<std::vector<NodeId>> in_adj_;
    std::vector<std::vector<NodeId>> und_adj_;
};

struct SubgraphResult {
    Graph graph;
    // new dense id -> id in the parent graph
    std::vector<NodeId> parent_ids;
};

// Induced subgraph on the largest component of the undirected view, directed
// edges preserved. Ties between equal-size components break toward the one
// containing the smallest parent id. Relabeling is ascending by parent id.
SubgraphResult largest_connected_component(const Graph& g);

struct LoadResult {
    Graph graph;
    std::vector<std::int64_t> original_ids;  // dense id -> id in the file
    BuildStats stats;
};

// Reads "u v" per line, '#' comments ignored. Node ids are compacted to
// dense 0..n-1 in order of first appearance; the original ids are retained.
// Throws std::runtime_error on malformed lines (with line number) or if the
// file yields an empty graph.
LoadResult load_edge_list(const std::string& path, bool directed);

// Writes the "original_id,dense_id" sidecar for a loaded graph.
void write_id_map(const std::string& path, const std::vector<std::int64_t>& original_ids);

}  // namespace netsample

#endif
