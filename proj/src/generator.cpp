#include "netsample/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace netsample {

namespace {

double lcc_fraction_of(const Graph& g) {
    if (g.node_count() == 0) return 0.0;
    return static_cast<double>(largest_connected_component(g).graph.node_count()) /
           static_cast<double>(g.node_count());
}

}  // namespace

SyntheticResult erdos_renyi(NodeId n, double p, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("erdos_renyi: n must be >= 3");
    if (!(p > 0.0 && p <= 1.0))
        throw std::invalid_argument("erdos_renyi: p must be in (0,1]");

    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    if (p == 1.0) {
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    } else {
        // Geometric skipping over the ordered pair space.
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const double log_q = std::log1p(-p);
        std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
        std::int64_t idx = -1;
        while (true) {
            double r = unif(rng);
            idx += 1 + static_cast<std::int64_t>(std::floor(std::log(1.0 - r) / log_q));
            if (idx >= total) break;
            // Unrank pair index -> (u, v), u < v.
            NodeId u = static_cast<NodeId>(
                n - 2 - std::floor(std::sqrt(-8.0 * idx + 4.0 * static_cast<double>(n) * (n - 1) - 7) / 2.0 - 0.5));
            std::int64_t off = idx - static_cast<std::int64_t>(u) * (2 * n - u - 1) / 2;
            NodeId v = static_cast<NodeId>(u + 1 + off);
            // Guard the float unranking near boundaries.
            while (v >= n) {
                ++u;
                off = idx - static_cast<std::int64_t>(u) * (2 * n - u - 1) / 2;
                v = static_cast<NodeId>(u + 1 + off);
            }
            edges.emplace_back(u, v);
        }
    }
    SyntheticResult out;
    out.graph = Graph::from_edges(n, std::move(edges), false);
    out.lcc_fraction = lcc_fraction_of(out.graph);
    return out;
}

SyntheticResult configuration_power_law(NodeId n, double exponent, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("configuration_power_law: n must be >= 3");
    if (!(exponent > 2.0 && exponent <= 3.5))
        throw std::invalid_argument("configuration_power_law: exponent must be in (2, 3.5]");

    std::mt19937_64 rng(seed);
    const int max_deg = std::max(2, static_cast<int>(std::floor(std::sqrt(static_cast<double>(n)))));

    // Inverse-CDF sampling of degrees from P(d) proportional to d^-exponent,
    // d in [1, max_deg].
    std::vector<double> cdf(max_deg);
    double sum = 0.0;
    for (int d = 1; d <= max_deg; ++d) {
        sum += std::pow(static_cast<double>(d), -exponent);
        cdf[d - 1] = sum;
    }
    for (double& c : cdf) c /= sum;

    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<int> degree(n);
    std::int64_t stub_total = 0;
    for (NodeId v = 0; v < n; ++v) {
        double r = unif(rng);
        int d = static_cast<int>(std::lower_bound(cdf.begin(), cdf.end(), r) - cdf.begin()) + 1;
        degree[v] = d;
        stub_total += d;
    }
    if (stub_total % 2 != 0) {
        degree[0] += 1;
        ++stub_total;
    }

    std::vector<NodeId> stubs;
    stubs.reserve(static_cast<std::size_t>(stub_total));
    for (NodeId v = 0; v < n; ++v)
        for (int k = 0; k < degree[v]; ++k) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);

    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2)
        edges.emplace_back(stubs[i], stubs[i + 1]);

    SyntheticResult out;
    out.graph = Graph::from_edges(n, std::move(edges), false);
    out.lcc_fraction = lcc_fraction_of(out.graph);
    return out;
}

SyntheticResult generate_synthetic(SyntheticKind kind, NodeId n, double param,
                                   std::uint64_t seed) {
    switch (kind) {
        case SyntheticKind::ErdosRenyi:
            return erdos_renyi(n, param, seed);
        case SyntheticKind::ConfigurationPowerLaw:
            return configuration_power_law(n, param, seed);
    }
    throw std::invalid_argument("unknown synthetic kind");
}

Graph orient_random(const Graph& g, double reciprocal_prob, std::uint64_t seed) {
    if (g.directed()) throw std::invalid_argument("orient_random: input must be undirected");
    if (!(reciprocal_prob >= 0.0 && reciprocal_prob <= 1.0))
        throw std::invalid_argument("orient_random: reciprocal_prob must be in [0,1]");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (v <= u) continue;
            if (unif(rng) < reciprocal_prob) {
                edges.emplace_back(u, v);
                edges.emplace_back(v, u);
            } else if (unif(rng) < 0.5) {
                edges.emplace_back(u, v);
            } else {
                edges.emplace_back(v, u);
            }
        }
    }
    return Graph::from_edges(g.node_count(), std::move(edges), true);
}

}  // namespace netsample
