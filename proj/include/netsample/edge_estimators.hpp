#ifndef NETSAMPLE_EDGE_ESTIMATORS_HPP
#define NETSAMPLE_EDGE_ESTIMATORS_HPP

#include <string>

#include "netsample/edge_labeler.hpp"
#include "netsample/stream.hpp"

namespace netsample {

enum class EdgeEstimatorId {
    Exact,
    Traversal,          // empirical frequency over walk-traversed edges
    TraversalDirected,  // direction-resolved traversal counts
    Neighbor,           // all edges incident to sampled nodes, reweighted
    NeighborDirected,
};

std::string to_string(EdgeEstimatorId id);

struct EdgeDensityEstimate {
    EdgeMass values;  // sparse, only observed labels
    EdgeEstimatorId estimator = EdgeEstimatorId::Traversal;
    std::size_t n_used = 0;
    double normalizer = 0.0;
};

// Empirical edge-label frequency over the traversed edges of a crawl stream.
// Endpoint attributes are known from the crawl itself.
EdgeDensityEstimate estimate_edge_traversal(const SampleStream& stream, const Graph& g,
                                            const EdgeLabeler& labeler);

// Directed variant: each traversed undirected edge contributes the labels of
// whichever directed arcs exist between its endpoints.
EdgeDensityEstimate estimate_edge_traversal_directed(const SampleStream& stream,
                                                     const Graph& g,
                                                     const EdgeLabeler& labeler);

// Reweighted count over all edges incident to sampled nodes; works for UNI
// streams too. Needs visibility covering the labeler's requirement.
EdgeDensityEstimate estimate_edge_neighbor(const SampleStream& stream, const Graph& g,
                                           const EdgeLabeler& labeler);

EdgeDensityEstimate estimate_edge_neighbor_directed(const SampleStream& stream,
                                                    const Graph& g,
                                                    const EdgeLabeler& labeler);

}  // namespace netsample

#endif
