#ifndef NETSAMPLE_NODE_ESTIMATORS_HPP
#define NETSAMPLE_NODE_ESTIMATORS_HPP

#include <string>
#include <vector>

#include "netsample/labels.hpp"
#include "netsample/stream.hpp"

namespace netsample {

enum class NodeEstimatorId {
    Exact,             // oracle full scan
    Simple,            // reweighted sampled nodes
    Neighbor,          // reweighted neighbors of sampled nodes
    Mixture,           // variance-weighted blend of the two
    DirectedNeighbor,  // reciprocity-corrected neighbors, directed graphs
    OutNeighbor,       // out-neighbors only, with in-degree correction
};

std::string to_string(NodeEstimatorId id);

// Normalized label -> mass map: sums to 1, all masses >= 0.
struct DensityEstimate {
    std::vector<double> values;  // indexed by label id, size K
    NodeEstimatorId estimator = NodeEstimatorId::Simple;
    std::size_t n_used = 0;
    double normalizer = 0.0;
};

struct MixtureWeights {
    std::vector<double> alpha;         // per label, in [0,1]
    std::size_t subset_count = 0;      // actual count used
    std::vector<double> var_simple;    // per-label subset variances
    std::vector<double> var_neighbor;
    std::vector<double> raw_blend;     // pre-renormalization masses
};

DensityEstimate estimate_simple(const SampleStream& stream, const LabelTable& labels);

DensityEstimate estimate_neighbor(const SampleStream& stream, const LabelTable& labels);

std::pair<DensityEstimate, MixtureWeights> estimate_mixture(const SampleStream& stream,
                                                            const LabelTable& labels,
                                                            std::size_t subset_count = 100);

DensityEstimate estimate_directed_neighbor(const SampleStream& stream,
                                           const LabelTable& labels);

DensityEstimate estimate_out_neighbor(const SampleStream& stream, const LabelTable& labels,
                                      double gamma = 1.0);

// CCDF over ordered numeric bins: xi_k = sum of masses above bin k.
std::vector<double> to_ccdf(const DensityEstimate& d, const LabelTable& labels);

}  // namespace netsample

#endif
