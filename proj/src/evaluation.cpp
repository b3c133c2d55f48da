#include "netsample/evaluation.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "netsample/rng.hpp"
#include "netsample/samplers.hpp"

namespace netsample {

DensityEstimate exact_node_density(const Graph& g, const LabelTable& labels) {
    DensityEstimate d;
    d.estimator = NodeEstimatorId::Exact;
    d.n_used = g.node_count();
    d.normalizer = static_cast<double>(g.node_count());
    d.values.assign(labels.label_count(), 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v) d.values[labels.label_of(v)] += 1.0;
    for (double& m : d.values) m /= d.normalizer;
    return d;
}

EdgeDensityEstimate exact_edge_density(const Graph& g, const EdgeLabeler& labeler,
                                       bool directed) {
    EdgeDensityEstimate d;
    d.estimator = EdgeEstimatorId::Exact;
    double total = 0.0;
    if (directed) {
        if (!g.directed())
            throw std::invalid_argument("exact_edge_density: graph is undirected");
        for (NodeId u = 0; u < g.node_count(); ++u) {
            for (NodeId v : g.out_neighbors(u)) {
                d.values[labeler(g, u, v)] += 1.0;
                total += 1.0;
            }
        }
    } else {
        for (NodeId u = 0; u < g.node_count(); ++u) {
            for (NodeId v : g.neighbors(u)) {
                if (u < v) {
                    d.values[labeler(g, u, v)] += 1.0;
                    total += 1.0;
                }
            }
        }
    }
    if (total == 0.0) throw std::invalid_argument("exact_edge_density: no edges");
    for (auto& [l, m] : d.values) m /= total;
    d.normalizer = total;
    d.n_used = static_cast<std::size_t>(total);
    return d;
}

std::vector<NmseRow> nmse(const std::vector<DensityEstimate>& runs,
                          const DensityEstimate& truth, const LabelTable& labels,
                          double truth_floor) {
    if (runs.size() < 2) throw std::invalid_argument("nmse: need at least 2 runs");
    const int k_labels = labels.label_count();
    const double nan = std::numeric_limits<double>::quiet_NaN();

    std::vector<double> truth_ccdf;
    std::vector<std::vector<double>> run_ccdfs;
    if (labels.numeric) {
        truth_ccdf = to_ccdf(truth, labels);
        run_ccdfs.reserve(runs.size());
        for (const auto& r : runs) run_ccdfs.push_back(to_ccdf(r, labels));
    }

    std::vector<NmseRow> rows;
    for (int k = 0; k < k_labels; ++k) {
        if (truth.values[k] < truth_floor) continue;
        double se = 0.0;
        for (const auto& r : runs) {
            double e = r.values[k] - truth.values[k];
            se += e * e;
        }
        NmseRow row;
        row.label = k;
        row.truth = truth.values[k];
        row.nmse = std::sqrt(se / runs.size()) / truth.values[k];
        row.cnmse = nan;
        if (labels.numeric && truth_ccdf[k] > 0.0) {
            double cse = 0.0;
            for (const auto& rc : run_ccdfs) {
                double e = rc[k] - truth_ccdf[k];
                cse += e * e;
            }
            row.cnmse = std::sqrt(cse / runs.size()) / truth_ccdf[k];
        }
        rows.push_back(row);
    }
    return rows;
}

double delta_metric(const EdgeDensityEstimate& estimate, const EdgeDensityEstimate& truth) {
    double sq = 0.0;
    for (const auto& [label, mass] : truth.values) {
        auto it = estimate.values.find(label);
        double est = it == estimate.values.end() ? 0.0 : it->second;
        sq += (est - mass) * (est - mass);
    }
    for (const auto& [label, mass] : estimate.values) {
        if (!truth.values.count(label)) sq += mass * mass;
    }
    return std::sqrt(sq);
}

SampleStream run_sampler(const TrialConfig& cfg, std::uint64_t run_seed, double* spent) {
    const Graph& g = *cfg.graph;
    QueryContext ctx{cfg.graph, cfg.labels, cfg.visibility};
    CostLedger ledger(CostLedger::kUnlimited, cfg.uni_cost);
    std::mt19937_64 rng = make_rng(run_seed, 0xA11CE);
    std::uniform_int_distribution<NodeId> pick(0, g.node_count() - 1);

    auto pick_start = [&]() {
        NodeId v = pick(rng);
        while (g.degree(v) == 0) v = pick(rng);
        return v;
    };

    SampleStream stream;
    switch (cfg.method) {
        case Method::UNI: {
            // Equal total budget: each UNI hit costs uni_cost queries.
            std::size_t n = static_cast<std::size_t>(
                static_cast<double>(cfg.budget) / cfg.uni_cost);
            if (n == 0) n = 1;
            stream = uni_sample(ctx, ledger, n, run_seed);
            break;
        }
        case Method::RW:
            stream = random_walk(ctx, ledger, pick_start(), cfg.budget, run_seed);
            break;
        case Method::FS: {
            std::size_t m = std::min<std::size_t>(cfg.walkers, cfg.budget);
            if (m == 0) m = 1;
            // Steady-state initialization: uniform seeds, not charged.
            std::vector<NodeId> seeds;
            seeds.reserve(m);
            for (std::size_t k = 0; k < m; ++k) seeds.push_back(pick_start());
            stream = frontier_sample(ctx, ledger, m, &seeds, cfg.budget, run_seed);
            break;
        }
        case Method::WRW:
            stream = weighted_random_walk(ctx, ledger, pick_start(), cfg.budget, cfg.beta,
                                          false, run_seed);
            break;
    }
    if (spent) *spent = ledger.total_spent();
    return stream;
}

DensityEstimate apply_estimator(const TrialConfig& cfg, const SampleStream& stream) {
    switch (cfg.estimator) {
        case NodeEstimatorId::Simple:
            return estimate_simple(stream, *cfg.labels);
        case NodeEstimatorId::Neighbor:
            return estimate_neighbor(stream, *cfg.labels);
        case NodeEstimatorId::Mixture:
            return estimate_mixture(stream, *cfg.labels, cfg.subset_count).first;
        case NodeEstimatorId::DirectedNeighbor:
            return estimate_directed_neighbor(stream, *cfg.labels);
        case NodeEstimatorId::OutNeighbor:
            return estimate_out_neighbor(stream, *cfg.labels, cfg.gamma);
        case NodeEstimatorId::Exact:
            return exact_node_density(*cfg.graph, *cfg.labels);
    }
    throw std::invalid_argument("unknown estimator");
}

TrialResult run_trials(const TrialConfig& cfg) {
    if (cfg.runs < 2) throw std::invalid_argument("run_trials: need at least 2 runs");
    if (cfg.budget < 1) throw std::invalid_argument("run_trials: budget resolves to 0 samples");
    // Fail on capability mismatches before burning any runs.
    {
        double spent = 0.0;
        TrialConfig probe = cfg;
        probe.budget = std::max<std::size_t>(2, std::min<std::size_t>(cfg.budget, 64));
        SampleStream s = run_sampler(probe, derive_seed(cfg.seed, 0), &spent);
        (void)apply_estimator(probe, s);
    }

    TrialResult result;
    result.runs.resize(cfg.runs);
    result.spent_per_run.resize(cfg.runs);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            SampleStream s = run_sampler(cfg, derive_seed(cfg.seed, r + 1),
                                         &result.spent_per_run[r]);
            result.runs[r] = apply_estimator(cfg, s);
        }
    };

    std::size_t jobs = std::max<std::size_t>(1, cfg.jobs);
    if (jobs == 1) {
        work(0, cfg.runs);
    } else {
        std::vector<std::thread> threads;
        std::size_t chunk = (cfg.runs + jobs - 1) / jobs;
        for (std::size_t j = 0; j < jobs; ++j) {
            std::size_t b = j * chunk, e = std::min(cfg.runs, b + chunk);
            if (b >= e) break;
            threads.emplace_back(work, b, e);
        }
        for (auto& t : threads) t.join();
    }

    DensityEstimate truth = exact_node_density(*cfg.graph, *cfg.labels);
    result.metrics = nmse(result.runs, truth, *cfg.labels);
    return result;
}

namespace {

bool is_connected(const Graph& g) {
    if (g.node_count() == 0) return false;
    std::vector<char> seen(g.node_count(), 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        ++count;
        for (NodeId w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return count == static_cast<std::size_t>(g.node_count());
}

}  // namespace

SpectralReport spectral_alpha(const Graph& g) {
    const NodeId n = g.node_count();
    if (!is_connected(g)) throw std::invalid_argument("spectral_alpha: graph is disconnected");

    // Symmetrized walk operator D^{-1/2} A D^{-1/2}; same spectrum as the
    // transition matrix, and the normalized Laplacian is I minus it.
    Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(n, n);
    for (NodeId v = 0; v < n; ++v) {
        double dv = g.degree(v);
        for (NodeId w : g.neighbors(v))
            sym(v, w) = 1.0 / std::sqrt(dv * static_cast<double>(g.degree(w)));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym,
                                                          Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();  // ascending

    SpectralReport rep;
    rep.transition_min = ev(0);
    rep.transition_second = ev(n - 2);
    rep.lambda2_normalized = 1.0 - rep.transition_second;
    return rep;
}

WalkVsIidReport walk_vs_iid_diagnostic(const Graph& g, const LabelTable& labels, std::size_t n,
                               std::size_t runs, std::uint64_t seed) {
    if (g.node_count() > 500)
        throw std::invalid_argument("walk_vs_iid_diagnostic: graph too large");
    SpectralReport spec = spectral_alpha(g);
    if (spec.transition_min <= -1.0 + 1e-9)
        throw std::invalid_argument("walk_vs_iid_diagnostic: graph is bipartite");

    const int k_labels = labels.label_count();
    const double two_e = 2.0 * static_cast<double>(g.edge_count());

    // phi_k(v) = 1(L(v)=k)/d_v; its stationary mean is |V_k| / 2|E|.
    std::vector<double> target(k_labels, 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v)
        target[labels.label_of(v)] += 1.0 / two_e;

    std::vector<double> degrees(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) degrees[v] = g.degree(v);

    WalkVsIidReport rep;
    rep.mse_walk.assign(k_labels, 0.0);
    rep.mse_iid.assign(k_labels, 0.0);
    rep.bound = 1.0 / (1.0 - spec.transition_second);

    for (std::size_t r = 0; r < runs; ++r) {
        std::mt19937_64 rng = make_rng(seed, r);
        std::discrete_distribution<NodeId> by_degree(degrees.begin(), degrees.end());

        // Stationary-start walk.
        std::vector<double> mean_walk(k_labels, 0.0), mean_iid(k_labels, 0.0);
        NodeId cur = by_degree(rng);
        for (std::size_t i = 0; i < n; ++i) {
            auto nbrs = g.neighbors(cur);
            std::uniform_int_distribution<std::size_t> step(0, nbrs.size() - 1);
            cur = nbrs[step(rng)];
            mean_walk[labels.label_of(cur)] += 1.0 / g.degree(cur);

            NodeId w = by_degree(rng);
            mean_iid[labels.label_of(w)] += 1.0 / g.degree(w);
        }
        for (int k = 0; k < k_labels; ++k) {
            double ew = mean_walk[k] / n - target[k];
            double ei = mean_iid[k] / n - target[k];
            rep.mse_walk[k] += ew * ew / runs;
            rep.mse_iid[k] += ei * ei / runs;
        }
    }
    for (int k = 0; k < k_labels; ++k) {
        if (rep.mse_iid[k] > 0.0)
            rep.max_ratio = std::max(rep.max_ratio, rep.mse_walk[k] / rep.mse_iid[k]);
    }
    return rep;
}

void write_density_csv(std::ostream& out, const DensityEstimate& d,
                       const LabelTable& labels) {
    out << "label,mass,estimator,n_used\n";
    for (std::size_t k = 0; k < d.values.size(); ++k) {
        out << labels.label_names[k] << "," << d.values[k] << ","
            << to_string(d.estimator) << "," << d.n_used << "\n";
    }
}

void write_ccdf_csv(std::ostream& out, const std::vector<double>& ccdf) {
    out << "degree,ccdf\n";
    for (std::size_t k = 0; k < ccdf.size(); ++k) out << k << "," << ccdf[k] << "\n";
}

void write_nmse_csv(std::ostream& out, const std::vector<NmseRow>& rows,
                    const LabelTable& labels) {
    out << "label,truth,nmse,cnmse\n";
    for (const NmseRow& r : rows) {
        out << labels.label_names[r.label] << "," << r.truth << "," << r.nmse << ",";
        if (std::isnan(r.cnmse)) out << "";
        else out << r.cnmse;
        out << "\n";
    }
}

void write_runs_csv(std::ostream& out, const std::vector<DensityEstimate>& runs,
                    const LabelTable& labels) {
    out << "run,label,estimate\n";
    for (std::size_t r = 0; r < runs.size(); ++r) {
        for (std::size_t k = 0; k < runs[r].values.size(); ++k) {
            if (runs[r].values[k] == 0.0) continue;  // sparse
            out << r << "," << labels.label_names[k] << "," << runs[r].values[k] << "\n";
        }
    }
}

void write_edge_density_csv(std::ostream& out, const EdgeDensityEstimate& d,
                            const EdgeLabeler& labeler) {
    out << "label,mass,estimator\n";
    for (const auto& [label, mass] : d.values)
        out << labeler.name(label) << "," << mass << "," << to_string(d.estimator) << "\n";
}

}  // namespace netsample
