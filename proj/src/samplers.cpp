#include "netsample/samplers.hpp"

#include <cmath>
#include <stdexcept>

#include "netsample/rng.hpp"

namespace netsample {

namespace {

void check_not_isolated(const Graph& g, NodeId v, const char* who) {
    if (v < 0 || v >= g.node_count())
        throw std::invalid_argument(std::string(who) + ": node id out of range");
    if (g.degree(v) == 0)
        throw std::invalid_argument(std::string(who) + ": start node is isolated");
}

SampleStream fs_core(const QueryContext& ctx, CostLedger& ledger,
                     std::vector<NodeId> starts, std::size_t n, std::uint64_t seed,
                     Method method) {
    const Graph& g = *ctx.graph;
    const std::size_t m = starts.size();

    SampleStream stream;
    stream.method = method;
    stream.pi_hat_rule = PiHatRule::DegreeProportional;
    stream.seed = seed;
    stream.directed_graph = g.directed();
    stream.visibility = ctx.visibility;
    stream.samples.reserve(n);
    stream.pi_hat.reserve(n);
    stream.traversed_edges.reserve(n);

    for (NodeId s : starts) check_not_isolated(g, s, "frontier_sample");

    std::mt19937_64 scheduler = make_rng(seed, 0);
    std::vector<std::mt19937_64> walker_rng;
    walker_rng.reserve(m);
    for (std::size_t k = 0; k < m; ++k) walker_rng.push_back(make_rng(seed, k + 1));

    // Current positions; replies for the frontier come from queries already
    // paid for (seed queries are part of seeding).
    std::vector<NodeId> current = std::move(starts);

    std::vector<double> degrees(m);
    for (std::size_t k = 0; k < m; ++k) degrees[k] = g.degree(current[k]);

    while (stream.size() < n) {
        std::size_t k = 0;
        if (m > 1) {
            std::discrete_distribution<std::size_t> pick(degrees.begin(), degrees.end());
            k = pick(scheduler);
        }
        NodeId u = current[k];
        auto nbrs = g.neighbors(u);
        std::uniform_int_distribution<std::size_t> step(0, nbrs.size() - 1);
        NodeId v = nbrs[step(walker_rng[k])];

        if (!ledger.try_charge_crawl()) {
            stream.exhausted = true;
            break;
        }
        NodeReply reply = ctx.query(v);
        stream.traversed_edges.emplace_back(u, v);
        stream.pi_hat.push_back(static_cast<double>(reply.degree));
        stream.samples.push_back(std::move(reply));
        current[k] = v;
        degrees[k] = g.degree(v);
    }
    return stream;
}

}  // namespace

SampleStream uni_sample(const QueryContext& ctx, CostLedger& ledger, std::size_t n,
                        std::uint64_t seed) {
    const Graph& g = *ctx.graph;
    if (g.node_count() == 0) throw std::invalid_argument("uni_sample: empty graph");

    SampleStream stream;
    stream.method = Method::UNI;
    stream.pi_hat_rule = PiHatRule::Uniform;
    stream.seed = seed;
    stream.directed_graph = g.directed();
    stream.visibility = ctx.visibility;
    stream.samples.reserve(n);
    stream.pi_hat.reserve(n);

    std::mt19937_64 rng = make_rng(seed, 0);
    std::uniform_int_distribution<NodeId> pick(0, g.node_count() - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (!ledger.try_charge_uni(rng)) {
            stream.exhausted = true;
            break;
        }
        NodeId v = pick(rng);
        stream.samples.push_back(ctx.query(v));
        stream.pi_hat.push_back(1.0);
    }
    return stream;
}

SampleStream random_walk(const QueryContext& ctx, CostLedger& ledger, NodeId start,
                         std::size_t n, std::uint64_t seed) {
    check_not_isolated(*ctx.graph, start, "random_walk");
    return fs_core(ctx, ledger, {start}, n, seed, Method::RW);
}

SampleStream frontier_sample(const QueryContext& ctx, CostLedger& ledger, std::size_t m,
                             const std::vector<NodeId>* seeds, std::size_t n,
                             std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("frontier_sample: m must be >= 1");
    if (n < m) throw std::invalid_argument("frontier_sample: n must be >= m");

    std::vector<NodeId> starts;
    if (seeds) {
        if (seeds->size() != m)
            throw std::invalid_argument("frontier_sample: seed list size != m");
        starts = *seeds;
    } else {
        // UNI seeding, charged at UNI cost. Walker seeds use a dedicated
        // stream so they do not perturb the walk streams.
        const Graph& g = *ctx.graph;
        std::mt19937_64 rng = make_rng(seed, 1ULL << 32);
        std::uniform_int_distribution<NodeId> pick(0, g.node_count() - 1);
        while (starts.size() < m) {
            if (!ledger.try_charge_uni(rng))
                throw std::runtime_error("frontier_sample: budget exhausted during UNI seeding");
            NodeId v = pick(rng);
            if (g.degree(v) == 0) continue;  // walkers cannot start isolated
            starts.push_back(v);
        }
    }
    return fs_core(ctx, ledger, std::move(starts), n, seed, Method::FS);
}

double wrw_pi_hat(const NodeReply& reply, double beta, bool directed_weights) {
    double own;
    if (directed_weights) {
        if (!reply.in_degree || !reply.out_degree)
            throw CapabilityError("wrw_pi_hat: own in/out degrees unavailable");
        own = std::pow(static_cast<double>(*reply.in_degree + *reply.out_degree), beta);
    } else {
        own = std::pow(static_cast<double>(reply.degree), beta);
    }
    double sum = 0.0;
    for (const NeighborInfo& nb : reply.neighbors) {
        double w;
        if (directed_weights) {
            if (!nb.in_degree || !nb.out_degree)
                throw CapabilityError("wrw_pi_hat: neighbor in/out degrees unavailable");
            w = std::pow(static_cast<double>(*nb.in_degree + *nb.out_degree), beta);
        } else {
            if (!nb.degree)
                throw CapabilityError("wrw_pi_hat: neighbor degrees unavailable");
            w = std::pow(static_cast<double>(*nb.degree), beta);
        }
        sum += own * w;
    }
    return sum;
}

SampleStream weighted_random_walk(const QueryContext& ctx, CostLedger& ledger,
                                  NodeId start, std::size_t n, double beta,
                                  bool directed_weights, std::uint64_t seed) {
    const Graph& g = *ctx.graph;
    check_not_isolated(g, start, "weighted_random_walk");
    if (ctx.visibility == Visibility::SelfOnly || ctx.visibility == Visibility::OutNbrWithInDeg)
        throw CapabilityError("weighted_random_walk: neighbor degrees not visible");

    SampleStream stream;
    stream.method = Method::WRW;
    stream.pi_hat_rule = PiHatRule::WeightProportional;
    stream.seed = seed;
    stream.directed_graph = g.directed();
    stream.visibility = ctx.visibility;
    stream.samples.reserve(n);
    stream.pi_hat.reserve(n);
    stream.traversed_edges.reserve(n);

    std::mt19937_64 rng = make_rng(seed, 1);
    NodeReply here = ctx.query(start);  // seed reply, part of being given the start
    std::vector<double> weights;

    while (stream.size() < n) {
        weights.clear();
        for (const NeighborInfo& nb : here.neighbors) {
            double dw;
            if (directed_weights) {
                if (!nb.in_degree || !nb.out_degree)
                    throw CapabilityError("weighted_random_walk: neighbor degrees unavailable");
                dw = static_cast<double>(*nb.in_degree + *nb.out_degree);
            } else {
                if (!nb.degree)
                    throw CapabilityError("weighted_random_walk: neighbor degrees unavailable");
                dw = static_cast<double>(*nb.degree);
            }
            // The w(u,v) factor from u's side is common to all neighbors and
            // cancels in the choice.
            weights.push_back(std::pow(dw, beta));
        }
        std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
        std::size_t j = pick(rng);
        NodeId v = here.neighbors[j].id;

        if (!ledger.try_charge_crawl()) {
            stream.exhausted = true;
            break;
        }
        NodeReply reply = ctx.query(v);
        stream.traversed_edges.emplace_back(here.node, v);
        stream.pi_hat.push_back(wrw_pi_hat(reply, beta, directed_weights));
        here = reply;
        stream.samples.push_back(std::move(reply));
    }
    return stream;
}

}  // namespace netsample
