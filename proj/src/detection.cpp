#include "netsample/detection.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "netsample/samplers.hpp"

namespace netsample {

namespace {

std::vector<std::pair<NodeId, int>> top_of_pool(
    const std::unordered_map<NodeId, int>& degrees, std::size_t top_n) {
    std::vector<std::pair<NodeId, int>> pool(degrees.begin(), degrees.end());
    std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (pool.size() > top_n) pool.resize(top_n);
    return pool;
}

void check_seed(const QueryContext& ctx, NodeId seed, const char* who) {
    if (seed < 0 || seed >= ctx.graph->node_count())
        throw std::invalid_argument(std::string(who) + ": seed out of range");
    if (ctx.graph->degree(seed) == 0)
        throw std::invalid_argument(std::string(who) + ": seed is isolated");
}

}  // namespace

DetectionResult detect_from_stream(const SampleStream& stream, std::size_t top_n) {
    if (stream.samples.empty()) throw std::invalid_argument("detect_from_stream: empty stream");
    std::unordered_map<NodeId, int> degrees;
    bool any_neighbor_degrees = false;
    for (const NodeReply& r : stream.samples) {
        degrees[r.node] = r.degree;
        for (const NeighborInfo& nb : r.neighbors) {
            if (nb.degree) {
                degrees.emplace(nb.id, *nb.degree);
                any_neighbor_degrees = true;
            }
        }
    }
    DetectionResult res;
    res.pool = any_neighbor_degrees ? CandidatePool::SampledPlusNeighborhood
                                    : CandidatePool::SampledOnly;
    res.top = top_of_pool(degrees, top_n);
    return res;
}

DetectionResult xs_detect(const QueryContext& ctx, NodeId seed, std::size_t top_n,
                          CostLedger& ledger, bool free_frontier,
                          std::size_t max_additions) {
    check_seed(ctx, seed, "xs_detect");
    const Graph& g = *ctx.graph;

    std::unordered_set<NodeId> in_s;
    std::set<NodeId> frontier;  // ordered for deterministic crawling
    std::unordered_map<NodeId, int> known_degree;
    std::unordered_set<NodeId> crawled;

    bool exhausted = false;
    auto crawl = [&](NodeId v) {
        if (crawled.count(v)) return true;
        if (!free_frontier && !ledger.try_charge_crawl()) {
            exhausted = true;
            return false;
        }
        NodeReply r = ctx.query(v);
        known_degree[v] = r.degree;
        crawled.insert(v);
        return true;
    };

    if (!ledger.try_charge_crawl()) {
        DetectionResult res;
        res.spent_crawl = ledger.spent_crawl();
        res.spent_total = ledger.total_spent();
        return res;
    }
    {
        NodeReply r = ctx.query(seed);
        crawled.insert(seed);
        known_degree[seed] = r.degree;
    }
    in_s.insert(seed);
    std::vector<NodeId> order{seed};
    for (NodeId w : g.neighbors(seed)) frontier.insert(w);

    std::size_t additions = 0;
    while (!frontier.empty() && !exhausted && additions < max_additions) {
        // Score needs every frontier node's own neighbor set.
        for (NodeId u : frontier) {
            if (!crawl(u)) break;
        }
        if (exhausted) break;

        NodeId best = -1;
        int best_score = -1;
        for (NodeId u : frontier) {
            int outside = 0;
            for (NodeId w : g.neighbors(u)) {
                if (!in_s.count(w) && !frontier.count(w)) ++outside;
            }
            if (outside > best_score || (outside == best_score && u < best)) {
                best = u;
                best_score = outside;
            }
        }
        frontier.erase(best);
        in_s.insert(best);
        order.push_back(best);
        ++additions;
        for (NodeId w : g.neighbors(best)) {
            if (!in_s.count(w)) frontier.insert(w);
        }
    }

    DetectionResult res;
    res.pool = CandidatePool::SampledPlusNeighborhood;
    res.top = top_of_pool(known_degree, top_n);
    res.sampled_set = std::move(order);
    res.spent_crawl = ledger.spent_crawl();
    res.spent_total = ledger.total_spent();
    return res;
}

DetectionResult mxs_detect(const QueryContext& ctx, NodeId seed, std::size_t top_n,
                           bool directed_scores, CostLedger& ledger,
                           std::size_t max_additions) {
    check_seed(ctx, seed, "mxs_detect");
    if (!visibility_grants(ctx.visibility, Visibility::NbrDegrees))
        throw CapabilityError("mxs_detect requires free neighbor degrees");
    if (directed_scores && !ctx.graph->directed())
        throw std::invalid_argument("mxs_detect: directed scores on an undirected graph");

    std::unordered_set<NodeId> in_s;
    std::unordered_map<NodeId, int> score_degree;  // d, or d_in + d_out
    std::unordered_map<NodeId, int> edges_into_s;  // d_u^(S)
    // Lazy max-heap of (score, -id); stale entries are re-validated on pop.
    using Entry = std::pair<int, NodeId>;
    auto cmp = [](const Entry& a, const Entry& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);

    auto reply_score_degree = [&](const NeighborInfo& nb) -> int {
        if (directed_scores) {
            if (!nb.in_degree || !nb.out_degree)
                throw CapabilityError("mxs_detect: neighbor in/out degrees unavailable");
            return *nb.in_degree + *nb.out_degree;
        }
        if (!nb.degree) throw CapabilityError("mxs_detect: neighbor degrees unavailable");
        return *nb.degree;
    };

    std::vector<NodeId> order;
    auto absorb = [&](NodeId v) -> bool {
        // v joins S: crawl it and refresh frontier bookkeeping.
        if (!ledger.try_charge_crawl()) return false;
        NodeReply r = ctx.query(v);
        in_s.insert(v);
        order.push_back(v);
        score_degree[v] = directed_scores && r.in_degree && r.out_degree
                              ? *r.in_degree + *r.out_degree
                              : r.degree;
        for (const NeighborInfo& nb : r.neighbors) {
            if (in_s.count(nb.id)) continue;
            score_degree[nb.id] = reply_score_degree(nb);
            int gained = directed_scores ? (nb.is_in ? 1 : 0) + (nb.is_out ? 1 : 0) : 1;
            edges_into_s[nb.id] += gained;
            heap.emplace(score_degree[nb.id] - edges_into_s[nb.id], nb.id);
        }
        return true;
    };

    std::size_t additions = 0;
    if (absorb(seed)) {
        while (!heap.empty() && additions < max_additions) {
            auto [score, u] = heap.top();
            heap.pop();
            if (in_s.count(u)) continue;
            int current = score_degree[u] - edges_into_s[u];
            if (current != score) {
                heap.emplace(current, u);  // stale, re-queue at the true score
                continue;
            }
            if (!absorb(u)) break;
            ++additions;
        }
    }

    DetectionResult res;
    res.pool = CandidatePool::SampledPlusNeighborhood;
    res.top = top_of_pool(score_degree, top_n);  // S plus its frontier
    res.sampled_set = std::move(order);
    res.spent_crawl = ledger.spent_crawl();
    res.spent_total = ledger.total_spent();
    return res;
}

DetectionResult wrw_detect(const QueryContext& ctx, NodeId seed, std::size_t top_n,
                           double beta, CostLedger& ledger, std::uint64_t rng_seed) {
    check_seed(ctx, seed, "wrw_detect");
    if (!ledger.try_charge_crawl()) {
        DetectionResult res;
        res.spent_total = ledger.total_spent();
        return res;
    }
    std::size_t steps = 0;
    if (ledger.remaining() > 0 &&
        ledger.remaining() < static_cast<double>(std::numeric_limits<std::size_t>::max()))
        steps = static_cast<std::size_t>(ledger.remaining());
    SampleStream stream =
        weighted_random_walk(ctx, ledger, seed, steps, beta, false, rng_seed);

    // The seed itself is part of S.
    NodeReply seed_reply = ctx.query(seed);
    stream.samples.push_back(seed_reply);
    stream.pi_hat.push_back(1.0);

    DetectionResult res = detect_from_stream(stream, top_n);
    res.spent_crawl = ledger.spent_crawl();
    res.spent_total = ledger.total_spent();
    return res;
}

std::vector<std::pair<NodeId, int>> exact_top_degrees(const Graph& g, std::size_t top_n,
                                                      bool by_in_out_degree) {
    std::vector<std::pair<NodeId, int>> all(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        int d = by_in_out_degree ? g.in_degree(v) + g.out_degree(v) : g.degree(v);
        all[v] = {v, d};
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (all.size() > top_n) all.resize(top_n);
    return all;
}

double detection_recall(const DetectionResult& found, const Graph& g, std::size_t top_n,
                        bool by_in_out_degree) {
    auto exact = exact_top_degrees(g, top_n, by_in_out_degree);
    std::unordered_set<NodeId> truth;
    for (const auto& [v, d] : exact) truth.insert(v);
    std::size_t hit = 0;
    for (const auto& [v, d] : found.top)
        if (truth.count(v)) ++hit;
    return static_cast<double>(hit) / static_cast<double>(top_n);
}

}  // namespace netsample
