#ifndef NETSAMPLE_EVALUATION_HPP
#define NETSAMPLE_EVALUATION_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "netsample/edge_estimators.hpp"
#include "netsample/node_estimators.hpp"

namespace netsample {

// --- ground-truth oracles (full scans) ---

DensityEstimate exact_node_density(const Graph& g, const LabelTable& labels);

EdgeDensityEstimate exact_edge_density(const Graph& g, const EdgeLabeler& labeler,
                                       bool directed);

// --- error metrics ---

struct NmseRow {
    int label = 0;
    double truth = 0.0;
    double nmse = 0.0;
    double cnmse = 0.0;  // NaN when CCDFs are not applicable
};

// Per-label root-mean-square error over runs, normalized by the true mass.
// Labels below `truth_floor` are skipped. CNMSE rows are filled when the
// label domain is numeric.
std::vector<NmseRow> nmse(const std::vector<DensityEstimate>& runs,
                          const DensityEstimate& truth, const LabelTable& labels,
                          double truth_floor = 1e-4);

// Euclidean error of a joint degree distribution (or any edge density)
// estimate against the truth, over the union of observed labels.
double delta_metric(const EdgeDensityEstimate& estimate,
                    const EdgeDensityEstimate& truth);

// --- Monte Carlo trial runner ---

struct TrialConfig {
    const Graph* graph = nullptr;
    const LabelTable* labels = nullptr;
    Method method = Method::FS;
    NodeEstimatorId estimator = NodeEstimatorId::Simple;
    Visibility visibility = Visibility::NbrDegreesLabels;
    std::size_t budget = 0;       // sampled nodes per run
    std::size_t runs = 1000;
    std::uint64_t seed = 1;
    double uni_cost = 1.0;
    std::size_t walkers = 100;    // FS
    double beta = 0.5;            // WRW
    double gamma = 1.0;           // out-neighbor estimator
    std::size_t subset_count = 100;
    std::size_t jobs = 1;
};

struct TrialResult {
    std::vector<DensityEstimate> runs;     // one per run, in run order
    std::vector<double> spent_per_run;     // total ledger spend
    std::vector<NmseRow> metrics;          // against the exact oracle
};

// R independent runs with per-run derived seeds; deterministic for a fixed
// master seed regardless of job count.
TrialResult run_trials(const TrialConfig& cfg);

// One sampling run per the config (no estimator applied).
SampleStream run_sampler(const TrialConfig& cfg, std::uint64_t run_seed,
                         double* spent = nullptr);

DensityEstimate apply_estimator(const TrialConfig& cfg, const SampleStream& stream);

// --- spectral diagnostics ---

struct SpectralReport {
    double lambda2_normalized = 0.0;  // first nontrivial normalized-Laplacian eigenvalue
    double transition_second = 0.0;   // second-largest eigenvalue of the walk operator
    double transition_min = 0.0;      // smallest one; -1 flags bipartite
};

// Dense eigensolve; graphs up to a couple thousand nodes, connected only.
SpectralReport spectral_alpha(const Graph& g);

struct WalkVsIidReport {
    std::vector<double> mse_walk;  // per label
    std::vector<double> mse_iid;   // degree-proportional i.i.d. baseline
    double max_ratio = 0.0;
    double bound = 0.0;  // 1/(1-alpha) for the transition-operator alpha
};

// Monte Carlo comparison of the walk estimator against i.i.d.
// degree-proportional importance sampling; informational only.
WalkVsIidReport walk_vs_iid_diagnostic(const Graph& g, const LabelTable& labels, std::size_t n,
                               std::size_t runs, std::uint64_t seed);

// --- CSV emission ---

void write_density_csv(std::ostream& out, const DensityEstimate& d,
                       const LabelTable& labels);
void write_ccdf_csv(std::ostream& out, const std::vector<double>& ccdf);
void write_nmse_csv(std::ostream& out, const std::vector<NmseRow>& rows,
                    const LabelTable& labels);
void write_runs_csv(std::ostream& out, const std::vector<DensityEstimate>& runs,
                    const LabelTable& labels);
void write_edge_density_csv(std::ostream& out, const EdgeDensityEstimate& d,
                            const EdgeLabeler& labeler);

}  // namespace netsample

#endif
