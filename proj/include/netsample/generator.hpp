#ifndef NETSAMPLE_GENERATOR_HPP
#define NETSAMPLE_GENERATOR_HPP

#include <cstdint>

#include "netsample/graph.hpp"

namespace netsample {

enum class SyntheticKind { ErdosRenyi, ConfigurationPowerLaw };

struct SyntheticResult {
    Graph graph;
    double lcc_fraction = 0.0;  // nodes in the LCC / n
};

// Simple undirected G(n,p); reproducible per seed. n >= 3, p in (0,1].
SyntheticResult erdos_renyi(NodeId n, double p, std::uint64_t seed);

// Configuration-model graph from a truncated power-law degree sequence with
// the given tail exponent in (2, 3.5]. Self-loops and multi-edges from the
// pairing are dropped, so realized degrees can undershoot slightly.
SyntheticResult configuration_power_law(NodeId n, double exponent, std::uint64_t seed);

SyntheticResult generate_synthetic(SyntheticKind kind, NodeId n, double param,
                                   std::uint64_t seed);

// Turns an undirected graph into a directed one: each edge becomes
// reciprocal with probability `reciprocal_prob`, otherwise a single arc
// with a random direction.
Graph orient_random(const Graph& g, double reciprocal_prob, std::uint64_t seed);

}  // namespace netsample

#endif
