#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "netsample/evaluation.hpp"
#include "netsample/generator.hpp"

using namespace netsample;

namespace {

LabelTable make_labels(std::vector<int> per_node, std::vector<std::string> names) {
    LabelTable t;
    t.node_labels = std::move(per_node);
    t.label_names = std::move(names);
    return t;
}

DensityEstimate single_mass(double a, double b) {
    DensityEstimate d;
    d.values = {a, b};
    return d;
}

}  // namespace

TEST_CASE("exact node density oracles") {
    Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}, false);
    LabelTable ab = make_labels({0, 0, 1}, {"A", "B"});
    DensityEstimate d = exact_node_density(k3, ab);
    CHECK(d.values[0] == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK(d.values[1] == doctest::Approx(1.0 / 3).epsilon(1e-12));

    Graph s5 = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, false);
    LabelTable deg = LabelTable::by_degree(s5);
    DensityEstimate dd = exact_node_density(s5, deg);
    CHECK(dd.values[1] == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(dd.values[4] == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("exact edge density oracles") {
    Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}, false);
    EdgeDensityEstimate d = exact_edge_density(k3, EdgeLabeler::degree_pair(), false);
    REQUIRE(d.values.size() == 1);
    CHECK(d.values.at({2, 2}) == doctest::Approx(1.0).epsilon(1e-12));

    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}}, false);
    EdgeDensityEstimate dp = exact_edge_density(p3, EdgeLabeler::degree_pair(), false);
    REQUIRE(dp.values.size() == 1);
    CHECK(dp.values.at({1, 2}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("nmse arithmetic on two runs") {
    LabelTable one = make_labels({}, {"x", "y"});
    DensityEstimate truth = single_mass(0.6, 0.4);
    std::vector<DensityEstimate> runs{single_mass(0.5, 0.5), single_mass(0.7, 0.3)};
    std::vector<NmseRow> rows = nmse(runs, truth, one);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].nmse == doctest::Approx(0.1 / 0.6).epsilon(1e-12));
    CHECK(std::isnan(rows[0].cnmse));  // categorical labels: no CCDF
}

TEST_CASE("nmse of exact runs is zero; tiny labels are skipped") {
    LabelTable one = make_labels({}, {"x", "y"});
    DensityEstimate truth = single_mass(1.0 - 5e-5, 5e-5);
    std::vector<DensityEstimate> runs{truth, truth, truth};
    std::vector<NmseRow> rows = nmse(runs, truth, one);
    REQUIRE(rows.size() == 1);  // the 5e-5 label is under the floor
    CHECK(rows[0].nmse == 0.0);
    CHECK_THROWS_AS(nmse({truth}, truth, one), std::invalid_argument);
}

TEST_CASE("delta metric") {
    EdgeDensityEstimate a, b;
    a.values[{1, 2}] = 0.5;
    a.values[{2, 2}] = 0.5;
    b.values[{1, 2}] = 0.5;
    b.values[{2, 2}] = 0.5;
    CHECK(delta_metric(a, b) == 0.0);
    b.values[{2, 2}] = 0.25;
    b.values[{3, 3}] = 0.25;
    double expect = std::sqrt(0.25 * 0.25 + 0.25 * 0.25);
    CHECK(delta_metric(a, b) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("spectral report: K3, K10, C4") {
    Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}, false);
    SpectralReport r3 = spectral_alpha(k3);
    CHECK(r3.lambda2_normalized == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(r3.transition_second == doctest::Approx(-0.5).epsilon(1e-9));

    SyntheticResult k10 = erdos_renyi(10, 1.0, 1);
    SpectralReport r10 = spectral_alpha(k10.graph);
    CHECK(r10.lambda2_normalized == doctest::Approx(10.0 / 9).epsilon(1e-9));

    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, false);
    SpectralReport rc = spectral_alpha(c4);
    CHECK(rc.transition_min == doctest::Approx(-1.0).epsilon(1e-9));

    Graph disc = Graph::from_edges(4, {{0, 1}, {2, 3}}, false);
    CHECK_THROWS_AS(spectral_alpha(disc), std::invalid_argument);
}

TEST_CASE("walk-vs-iid diagnostic respects the spectral bound on K10") {
    SyntheticResult k10 = erdos_renyi(10, 1.0, 1);
    LabelTable labels = LabelTable::random_categorical(10, {0.5, 0.5}, {"A", "B"}, 3);
    WalkVsIidReport rep = walk_vs_iid_diagnostic(k10.graph, labels, 50, 400, 9);
    CHECK(rep.bound == doctest::Approx(1.0 / (1.0 + 1.0 / 9)).epsilon(1e-6));
    // three-standard-error slack on a Monte Carlo ratio of means
    CHECK(rep.max_ratio < rep.bound * 1.5);

    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, false);
    CHECK_THROWS_AS(walk_vs_iid_diagnostic(c4, labels, 10, 10, 1), std::invalid_argument);
}

TEST_CASE("run_trials is deterministic and job-count independent") {
    SyntheticResult base = erdos_renyi(120, 0.08, 44);
    SubgraphResult lcc = largest_connected_component(base.graph);
    LabelTable labels = LabelTable::by_degree(lcc.graph);
    TrialConfig cfg;
    cfg.graph = &lcc.graph;
    cfg.labels = &labels;
    cfg.method = Method::FS;
    cfg.estimator = NodeEstimatorId::Simple;
    cfg.budget = 30;
    cfg.runs = 12;
    cfg.seed = 99;
    cfg.walkers = 4;
    TrialResult a = run_trials(cfg);
    cfg.jobs = 3;
    TrialResult b = run_trials(cfg);
    REQUIRE(a.runs.size() == b.runs.size());
    for (std::size_t r = 0; r < a.runs.size(); ++r)
        CHECK(a.runs[r].values == b.runs[r].values);
    for (std::size_t r = 0; r < a.metrics.size(); ++r)
        CHECK(a.metrics[r].nmse == b.metrics[r].nmse);
}

TEST_CASE("run_trials minimum configuration checks") {
    SyntheticResult base = erdos_renyi(50, 0.2, 2);
    SubgraphResult lcc = largest_connected_component(base.graph);
    LabelTable labels = LabelTable::by_degree(lcc.graph);
    TrialConfig cfg;
    cfg.graph = &lcc.graph;
    cfg.labels = &labels;
    cfg.method = Method::RW;
    cfg.estimator = NodeEstimatorId::Simple;
    cfg.budget = 10;
    cfg.runs = 2;
    cfg.seed = 5;
    TrialResult r = run_trials(cfg);
    CHECK(r.runs.size() == 2);
    cfg.runs = 1;
    CHECK_THROWS_AS(run_trials(cfg), std::invalid_argument);
    cfg.runs = 2;
    cfg.budget = 0;
    CHECK_THROWS_AS(run_trials(cfg), std::invalid_argument);
}

TEST_CASE("run_trials fails fast on capability mismatches") {
    SyntheticResult base = erdos_renyi(50, 0.2, 2);
    SubgraphResult lcc = largest_connected_component(base.graph);
    LabelTable labels = LabelTable::by_degree(lcc.graph);
    TrialConfig cfg;
    cfg.graph = &lcc.graph;
    cfg.labels = &labels;
    cfg.method = Method::RW;
    cfg.estimator = NodeEstimatorId::Neighbor;
    cfg.visibility = Visibility::SelfOnly;
    cfg.budget = 10;
    cfg.runs = 100;
    cfg.seed = 5;
    CHECK_THROWS_AS(run_trials(cfg), CapabilityError);
}

TEST_CASE("csv writers emit headers and rows") {
    LabelTable ab = make_labels({}, {"A", "B"});
    DensityEstimate d = single_mass(0.25, 0.75);
    std::ostringstream out;
    write_density_csv(out, d, ab);
    CHECK(out.str().find("label,mass,estimator,n_used") == 0);
    CHECK(out.str().find("A,0.25") != std::string::npos);

    std::ostringstream nm;
    NmseRow row;
    row.label = 1;
    row.truth = 0.75;
    row.nmse = 0.5;
    row.cnmse = std::numeric_limits<double>::quiet_NaN();
    write_nmse_csv(nm, {row}, ab);
    CHECK(nm.str().find("B,0.75,0.5,") != std::string::npos);
}
