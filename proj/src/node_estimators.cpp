#include "netsample/node_estimators.hpp"

#include <cassert>
#include <iostream>
#include <numeric>
#include <stdexcept>

namespace netsample {

std::string to_string(NodeEstimatorId id) {
    switch (id) {
        case NodeEstimatorId::Exact: return "exact";
        case NodeEstimatorId::Simple: return "simple";
        case NodeEstimatorId::Neighbor: return "neighbor";
        case NodeEstimatorId::Mixture: return "mixture";
        case NodeEstimatorId::DirectedNeighbor: return "directed-neighbor";
        case NodeEstimatorId::OutNeighbor: return "out-neighbor";
    }
    return "?";
}

namespace {

DensityEstimate finalize(std::vector<double> mass, double normalizer,
                         NodeEstimatorId id, std::size_t n_used) {
    if (normalizer <= 0.0)
        throw std::runtime_error("estimator normalizer is zero (no usable samples)");
    for (double& m : mass) m /= normalizer;
    DensityEstimate d;
    d.values = std::move(mass);
    d.estimator = id;
    d.n_used = n_used;
    d.normalizer = normalizer;
    return d;
}

// Simple estimator over a sample index range.
DensityEstimate simple_range(const SampleStream& stream, const LabelTable& labels,
                             std::size_t begin, std::size_t end) {
    std::vector<double> mass(labels.label_count(), 0.0);
    double c = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        double inv = 1.0 / stream.pi_hat[i];
        mass[stream.samples[i].label] += inv;
        c += inv;
    }
    return finalize(std::move(mass), c, NodeEstimatorId::Simple, end - begin);
}

// Neighbor estimator over a sample index range.
DensityEstimate neighbor_range(const SampleStream& stream, const LabelTable& labels,
                               std::size_t begin, std::size_t end) {
    std::vector<double> mass(labels.label_count(), 0.0);
    double c = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        const double inv_pi = 1.0 / stream.pi_hat[i];
        for (const NeighborInfo& nb : stream.samples[i].neighbors) {
            if (!nb.degree || !nb.label)
                throw CapabilityError(
                    "estimate_neighbor requires neighbor degrees and labels");
            assert(*nb.degree > 0);  // a neighbor is someone's neighbor
            double term = inv_pi / static_cast<double>(*nb.degree);
            mass[*nb.label] += term;
            c += term;
        }
    }
    return finalize(std::move(mass), c, NodeEstimatorId::Neighbor, end - begin);
}

void require_nonempty(const SampleStream& stream) {
    if (stream.samples.empty()) throw std::invalid_argument("empty sample stream");
}

}  // namespace

DensityEstimate estimate_simple(const SampleStream& stream, const LabelTable& labels) {
    require_nonempty(stream);
    return simple_range(stream, labels, 0, stream.size());
}

DensityEstimate estimate_neighbor(const SampleStream& stream, const LabelTable& labels) {
    require_nonempty(stream);
    return neighbor_range(stream, labels, 0, stream.size());
}

std::pair<DensityEstimate, MixtureWeights> estimate_mixture(const SampleStream& stream,
                                                            const LabelTable& labels,
                                                            std::size_t subset_count) {
    require_nonempty(stream);
    const std::size_t n = stream.size();
    if (n < 2 * subset_count) {
        std::size_t fallback = std::max<std::size_t>(2, n / 20);
        std::cerr << "estimate_mixture: stream of " << n << " samples is too short for "
                  << subset_count << " subsets, using " << fallback << "\n";
        subset_count = fallback;
    }
    const std::size_t subset_size = n / subset_count;  // tail remainder dropped
    const int k_labels = labels.label_count();

    // Per-subset estimates feed the per-label variances behind alpha.
    std::vector<double> mean_s(k_labels, 0.0), mean_n(k_labels, 0.0);
    std::vector<double> m2_s(k_labels, 0.0), m2_n(k_labels, 0.0);
    std::vector<std::vector<double>> sub_s, sub_n;
    sub_s.reserve(subset_count);
    sub_n.reserve(subset_count);
    for (std::size_t s = 0; s < subset_count; ++s) {
        std::size_t b = s * subset_size, e = b + subset_size;
        sub_s.push_back(simple_range(stream, labels, b, e).values);
        sub_n.push_back(neighbor_range(stream, labels, b, e).values);
    }
    for (int k = 0; k < k_labels; ++k) {
        for (std::size_t s = 0; s < subset_count; ++s) {
            mean_s[k] += sub_s[s][k];
            mean_n[k] += sub_n[s][k];
        }
        mean_s[k] /= subset_count;
        mean_n[k] /= subset_count;
        for (std::size_t s = 0; s < subset_count; ++s) {
            m2_s[k] += (sub_s[s][k] - mean_s[k]) * (sub_s[s][k] - mean_s[k]);
            m2_n[k] += (sub_n[s][k] - mean_n[k]) * (sub_n[s][k] - mean_n[k]);
        }
        m2_s[k] /= static_cast<double>(subset_count - 1);
        m2_n[k] /= static_cast<double>(subset_count - 1);
    }

    DensityEstimate full_s = estimate_simple(stream, labels);
    DensityEstimate full_n = estimate_neighbor(stream, labels);

    MixtureWeights w;
    w.subset_count = subset_count;
    w.var_simple = m2_s;
    w.var_neighbor = m2_n;
    w.alpha.resize(k_labels);
    w.raw_blend.resize(k_labels);
    double total = 0.0;
    for (int k = 0; k < k_labels; ++k) {
        double denom = m2_s[k] + m2_n[k];
        double alpha = denom > 0.0 ? m2_n[k] / denom : 0.5;
        w.alpha[k] = alpha;
        w.raw_blend[k] = alpha * full_s.values[k] + (1.0 - alpha) * full_n.values[k];
        total += w.raw_blend[k];
    }

    DensityEstimate mix;
    mix.estimator = NodeEstimatorId::Mixture;
    mix.n_used = n;
    mix.normalizer = total;
    mix.values.resize(k_labels);
    for (int k = 0; k < k_labels; ++k) mix.values[k] = w.raw_blend[k] / total;
    return {std::move(mix), std::move(w)};
}

DensityEstimate estimate_directed_neighbor(const SampleStream& stream,
                                           const LabelTable& labels) {
    require_nonempty(stream);
    if (!stream.directed_graph)
        throw std::invalid_argument(
            "estimate_directed_neighbor needs a directed graph (use estimate_neighbor)");

    std::vector<double> mass(labels.label_count(), 0.0);
    double c = 0.0;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        const double inv_pi = 1.0 / stream.pi_hat[i];
        for (const NeighborInfo& nb : stream.samples[i].neighbors) {
            if (!nb.in_degree || !nb.out_degree || !nb.label)
                throw CapabilityError(
                    "estimate_directed_neighbor requires neighbor in/out degrees and labels");
            int psi = (nb.is_in ? 1 : 0) + (nb.is_out ? 1 : 0);
            double term = psi * inv_pi /
                          static_cast<double>(*nb.in_degree + *nb.out_degree);
            mass[*nb.label] += term;
            c += term;
        }
    }
    return finalize(std::move(mass), c, NodeEstimatorId::DirectedNeighbor, stream.size());
}

DensityEstimate estimate_out_neighbor(const SampleStream& stream, const LabelTable& labels,
                                      double gamma) {
    require_nonempty(stream);
    if (!(gamma > 0.0))
        throw std::invalid_argument("estimate_out_neighbor: gamma must be > 0");

    std::vector<double> mass(labels.label_count(), 0.0);
    double c = 0.0;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        const NodeReply& r = stream.samples[i];
        const double inv_pi = 1.0 / stream.pi_hat[i];
        if (!r.in_degree)
            throw CapabilityError("estimate_out_neighbor requires the sample's in-degree");
        double self = gamma * inv_pi / (static_cast<double>(*r.in_degree) + gamma);
        mass[r.label] += self;
        c += self;
        for (const NeighborInfo& nb : r.neighbors) {
            if (!nb.is_out) continue;
            if (!nb.in_degree || !nb.label)
                throw CapabilityError(
                    "estimate_out_neighbor requires out-neighbor in-degrees and labels");
            double term = inv_pi / (static_cast<double>(*nb.in_degree) + gamma);
            mass[*nb.label] += term;
            c += term;
        }
    }
    return finalize(std::move(mass), c, NodeEstimatorId::OutNeighbor, stream.size());
}

std::vector<double> to_ccdf(const DensityEstimate& d, const LabelTable& labels) {
    if (!labels.numeric)
        throw std::invalid_argument("to_ccdf: label domain is not ordered numeric bins");
    std::vector<double> ccdf(d.values.size(), 0.0);
    double tail = 0.0;
    for (std::size_t k = d.values.size(); k-- > 0;) {
        ccdf[k] = tail;
        tail += d.values[k];
    }
    return ccdf;
}

}  // namespace netsample
