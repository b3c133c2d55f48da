#ifndef NETSAMPLE_SAMPLERS_HPP
#define NETSAMPLE_SAMPLERS_HPP

#include <cstdint>

#include "netsample/access.hpp"
#include "netsample/ledger.hpp"
#include "netsample/stream.hpp"

namespace netsample {

// n i.i.d. uniform nodes with replacement, each delivered hit charged the
// ledger's UNI cost. Stops early with the exhausted flag set when the budget
// runs out.
SampleStream uni_sample(const QueryContext& ctx, CostLedger& ledger, std::size_t n,
                        std::uint64_t seed);

// Simple random walk on the undirected view. One crawl query per sampled
// node; the start node is given and not itself a sample.
SampleStream random_walk(const QueryContext& ctx, CostLedger& ledger, NodeId start,
                         std::size_t n, std::uint64_t seed);

// Frontier sampling with m walkers scheduled by the race of exponential
// clocks: at each step the walker whose clock fires first (probability
// proportional to its current node's degree) advances to a uniform neighbor.
// Walkers use independent streams derived from (seed, walker index), so m=1
// reproduces random_walk exactly. seeds==nullptr draws m UNI seeds, charged
// at UNI cost.
SampleStream frontier_sample(const QueryContext& ctx, CostLedger& ledger, std::size_t m,
                             const std::vector<NodeId>* seeds, std::size_t n,
                             std::uint64_t seed);

// Weighted random walk with w(u,v) = (d_u d_v)^beta, or the in+out degree
// product form when directed_weights is set. Moves on the undirected view;
// requires neighbor degrees to be visible.
SampleStream weighted_random_walk(const QueryContext& ctx, CostLedger& ledger,
                                  NodeId start, std::size_t n, double beta,
                                  bool directed_weights, std::uint64_t seed);

// Sum of edge weights at the sampled node, the non-normalized stationary
// weight of a WRW sample. Reads degrees from the reply only.
double wrw_pi_hat(const NodeReply& reply, double beta, bool directed_weights);

}  // namespace netsample

#endif
