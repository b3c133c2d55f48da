#include "netsample/edge_estimators.hpp"

#include <stdexcept>

namespace netsample {

std::string to_string(EdgeEstimatorId id) {
    switch (id) {
        case EdgeEstimatorId::Exact: return "exact";
        case EdgeEstimatorId::Traversal: return "traversal";
        case EdgeEstimatorId::TraversalDirected: return "traversal-directed";
        case EdgeEstimatorId::Neighbor: return "neighbor";
        case EdgeEstimatorId::NeighborDirected: return "neighbor-directed";
    }
    return "?";
}

namespace {

EdgeDensityEstimate finalize(EdgeMass mass, double normalizer, EdgeEstimatorId id,
                             std::size_t n_used) {
    if (normalizer <= 0.0)
        throw std::runtime_error("edge estimator normalizer is zero");
    for (auto& [label, m] : mass) m /= normalizer;
    EdgeDensityEstimate d;
    d.values = std::move(mass);
    d.estimator = id;
    d.n_used = n_used;
    d.normalizer = normalizer;
    return d;
}

void require_traversal(const SampleStream& stream) {
    if (stream.traversed_edges.empty())
        throw CapabilityError("traversal estimator needs a crawl stream with traversed edges");
}

void require_visibility(const SampleStream& stream, const EdgeLabeler& labeler) {
    if (!visibility_grants(stream.visibility, labeler.required_visibility()))
        throw CapabilityError("stream visibility does not cover the edge labeler");
}

}  // namespace

EdgeDensityEstimate estimate_edge_traversal(const SampleStream& stream, const Graph& g,
                                            const EdgeLabeler& labeler) {
    require_traversal(stream);
    EdgeMass mass;
    for (const auto& [u, v] : stream.traversed_edges) mass[labeler(g, u, v)] += 1.0;
    return finalize(std::move(mass), static_cast<double>(stream.traversed_edges.size()),
                    EdgeEstimatorId::Traversal, stream.traversed_edges.size());
}

EdgeDensityEstimate estimate_edge_traversal_directed(const SampleStream& stream,
                                                     const Graph& g,
                                                     const EdgeLabeler& labeler) {
    require_traversal(stream);
    if (!g.directed())
        throw std::invalid_argument("estimate_edge_traversal_directed: graph is undirected");
    EdgeMass mass;
    double h_d = 0.0;
    for (const auto& [u, v] : stream.traversed_edges) {
        if (g.has_directed_edge(u, v)) {
            mass[labeler(g, u, v)] += 1.0;
            h_d += 1.0;
        }
        if (g.has_directed_edge(v, u)) {
            mass[labeler(g, v, u)] += 1.0;
            h_d += 1.0;
        }
    }
    return finalize(std::move(mass), h_d, EdgeEstimatorId::TraversalDirected,
                    stream.traversed_edges.size());
}

EdgeDensityEstimate estimate_edge_neighbor(const SampleStream& stream, const Graph& g,
                                           const EdgeLabeler& labeler) {
    if (stream.samples.empty()) throw std::invalid_argument("empty sample stream");
    require_visibility(stream, labeler);
    EdgeMass mass;
    double h = 0.0;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        const NodeReply& r = stream.samples[i];
        const double inv_pi = 1.0 / stream.pi_hat[i];
        for (const NeighborInfo& nb : r.neighbors)
            mass[labeler(g, r.node, nb.id)] += inv_pi;
        // Closed form of the per-neighbor sum: d_{s_i} / pi_hat.
        h += static_cast<double>(r.degree) * inv_pi;
    }
    return finalize(std::move(mass), h, EdgeEstimatorId::Neighbor, stream.size());
}

EdgeDensityEstimate estimate_edge_neighbor_directed(const SampleStream& stream,
                                                    const Graph& g,
                                                    const EdgeLabeler& labeler) {
    if (stream.samples.empty()) throw std::invalid_argument("empty sample stream");
    if (!g.directed())
        throw std::invalid_argument("estimate_edge_neighbor_directed: graph is undirected");
    require_visibility(stream, labeler);
    EdgeMass mass;
    double h_d = 0.0;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        const NodeReply& r = stream.samples[i];
        const double inv_pi = 1.0 / stream.pi_hat[i];
        for (const NeighborInfo& nb : r.neighbors) {
            if (nb.is_out) {
                mass[labeler(g, r.node, nb.id)] += inv_pi;
                h_d += inv_pi;
            }
            if (nb.is_in) {
                mass[labeler(g, nb.id, r.node)] += inv_pi;
                h_d += inv_pi;
            }
        }
    }
    return finalize(std::move(mass), h_d, EdgeEstimatorId::NeighborDirected, stream.size());
}

}  // namespace netsample
