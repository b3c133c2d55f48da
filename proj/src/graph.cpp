#include "netsample/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace netsample {

Graph Graph::from_edges(NodeId node_count, std::vector<Edge> edges,
                        bool directed, BuildStats* stats) {
    if (node_count < 0) throw std::invalid_argument("negative node count");
    BuildStats local;

    if (!directed) {
        for (auto& [u, v] : edges) {
            if (u > v) std::swap(u, v);
        }
    }
    std::size_t before = edges.size();
    std::erase_if(edges, [](const Edge& e) { return e.first == e.second; });
    local.self_loops_dropped = before - edges.size();

    std::sort(edges.begin(), edges.end());
    before = edges.size();
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    local.duplicates_dropped = before - edges.size();

    Graph g;
    g.directed_ = directed;
    g.out_adj_.assign(node_count, {});
    g.in_adj_.assign(node_count, {});
    g.und_adj_.assign(node_count, {});

    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= node_count || v < 0 || v >= node_count)
            throw std::invalid_argument("edge endpoint out of range");
        g.out_adj_[u].push_back(v);
        g.in_adj_[v].push_back(u);
        if (!directed) {
            g.out_adj_[v].push_back(u);
            g.in_adj_[u].push_back(v);
        }
    }
    for (auto& adj : g.out_adj_) std::sort(adj.begin(), adj.end());
    for (auto& adj : g.in_adj_) std::sort(adj.begin(), adj.end());

    // Undirected view: union of in- and out-lists, opposite-direction pairs
    // collapse.
    if (directed) {
        for (NodeId v = 0; v < node_count; ++v) {
            auto& u_adj = g.und_adj_[v];
            std::set_union(g.out_adj_[v].begin(), g.out_adj_[v].end(),
                           g.in_adj_[v].begin(), g.in_adj_[v].end(),
                           std::back_inserter(u_adj));
            g.edge_count_und_ += u_adj.size();
        }
        g.edge_count_und_ /= 2;
        g.edge_count_dir_ = edges.size();
    } else {
        g.und_adj_ = g.out_adj_;
        g.edge_count_und_ = edges.size();
        g.edge_count_dir_ = edges.size();
    }

    if (stats) *stats = local;
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    const auto& adj = und_adj_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

bool Graph::has_directed_edge(NodeId u, NodeId v) const {
    const auto& adj = out_adj_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

int Graph::psi(NodeId u, NodeId v) const {
    int r = 0;
    if (has_directed_edge(u, v)) ++r;
    if (std::binary_search(in_adj_[u].begin(), in_adj_[u].end(), v)) ++r;
    if (!directed_) return r > 0 ? 2 : 0;
    return r;
}

SubgraphResult largest_connected_component(const Graph& g) {
    const NodeId n = g.node_count();
    std::vector<NodeId> comp(n, -1);
    std::vector<std::size_t> comp_size;
    std::vector<NodeId> comp_min_id;

    std::vector<NodeId> stack;
    for (NodeId s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        NodeId c = static_cast<NodeId>(comp_size.size());
        std::size_t size = 0;
        stack.push_back(s);
        comp[s] = c;
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            ++size;
            for (NodeId w : g.neighbors(v)) {
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
        comp_size.push_back(size);
        comp_min_id.push_back(s);  // s is the smallest id in its component
    }

    NodeId best = 0;
    for (NodeId c = 1; c < static_cast<NodeId>(comp_size.size()); ++c) {
        if (comp_size[c] > comp_size[best] ||
            (comp_size[c] == comp_size[best] && comp_min_id[c] < comp_min_id[best]))
            best = c;
    }

    SubgraphResult out;
    std::vector<NodeId> dense(n, -1);
    for (NodeId v = 0; v < n; ++v) {
        if (comp[v] == best) {
            dense[v] = static_cast<NodeId>(out.parent_ids.size());
            out.parent_ids.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (NodeId v : out.parent_ids) {
        if (g.directed()) {
            for (NodeId w : g.out_neighbors(v))
                if (dense[w] >= 0) edges.emplace_back(dense[v], dense[w]);
        } else {
            for (NodeId w : g.neighbors(v))
                if (dense[w] >= 0 && v < w) edges.emplace_back(dense[v], dense[w]);
        }
    }
    out.graph = Graph::from_edges(static_cast<NodeId>(out.parent_ids.size()),
                                  std::move(edges), g.directed());
    return out;
}

LoadResult load_edge_list(const std::string& path, bool directed) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);

    LoadResult result;
    std::unordered_map<std::int64_t, NodeId> dense;
    std::vector<Edge> edges;
    std::string line;
    std::size_t lineno = 0;

    auto intern = [&](std::int64_t id) {
        auto [it, inserted] = dense.emplace(id, static_cast<NodeId>(result.original_ids.size()));
        if (inserted) result.original_ids.push_back(id);
        return it->second;
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        std::int64_t u, v;
        if (!(ls >> u >> v) || u < 0 || v < 0) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": malformed edge line");
        }
        std::string rest;
        if (ls >> rest) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": trailing tokens on edge line");
        }
        NodeId du = intern(u);  // sequenced: first appearance wins the lower id
        NodeId dv = intern(v);
        edges.emplace_back(du, dv);
    }
    if (result.original_ids.empty())
        throw std::runtime_error(path + ": empty graph");

    result.graph = Graph::from_edges(static_cast<NodeId>(result.original_ids.size()),
                                     std::move(edges), directed, &result.stats);
    return result;
}

void write_id_map(const std::string& path, const std::vector<std::int64_t>& original_ids) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write id map: " + path);
    out << "original_id,dense_id\n";
    for (std::size_t i = 0; i < original_ids.size(); ++i)
        out << original_ids[i] << "," << i << "\n";
}

}  // namespace netsample
