#ifndef NETSAMPLE_DETECTION_HPP
#define NETSAMPLE_DETECTION_HPP

#include <cstdint>
#include <vector>

#include "netsample/access.hpp"
#include "netsample/ledger.hpp"
#include "netsample/stream.hpp"

namespace netsample {

enum class CandidatePool { SampledOnly, SampledPlusNeighborhood };

// Top-N nodes by degree, scores exact for every listed node (their degrees
// were learned from paid-for replies). Sorted by score descending, ties by
// ascending id.
struct DetectionResult {
    std::vector<std::pair<NodeId, int>> top;
    CandidatePool pool = CandidatePool::SampledOnly;
    std::vector<NodeId> sampled_set;  // S in addition order (crawl methods)
    double spent_crawl = 0.0;
    double spent_total = 0.0;
};

// Top N of the sampled set (plus neighbors when their degrees are in the
// replies) by degree.
DetectionResult detect_from_stream(const SampleStream& stream, std::size_t top_n);

// Expansion sampling: greedily adds the frontier node with the most
// neighbors outside S and its frontier. Scoring needs the frontier's own
// neighbor lists, so every frontier node is crawled and charged; with
// free_frontier those crawls cost nothing (the comparison regime).
DetectionResult xs_detect(const QueryContext& ctx, NodeId seed, std::size_t top_n,
                          CostLedger& ledger, bool free_frontier = false,
                          std::size_t max_additions = static_cast<std::size_t>(-1));

// Modified expansion sampling: scores frontier nodes by degree minus edges
// into S, both known from free neighbor-degree replies; only the node
// actually added is crawled. directed_scores ranks by in+out degree.
DetectionResult mxs_detect(const QueryContext& ctx, NodeId seed, std::size_t top_n,
                           bool directed_scores, CostLedger& ledger,
                           std::size_t max_additions = static_cast<std::size_t>(-1));

// WRW for the remaining budget, then detection over the walk's pool.
DetectionResult wrw_detect(const QueryContext& ctx, NodeId seed, std::size_t top_n,
                           double beta, CostLedger& ledger, std::uint64_t rng_seed);

// |found top-N  intersect  exact top-N| / N, exact ties broken by id.
double detection_recall(const DetectionResult& found, const Graph& g, std::size_t top_n,
                        bool by_in_out_degree = false);

// Exact top-N by full degree sort (oracle).
std::vector<std::pair<NodeId, int>> exact_top_degrees(const Graph& g, std::size_t top_n,
                                                      bool by_in_out_degree = false);

}  // namespace netsample

#endif
