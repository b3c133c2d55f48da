#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "netsample/edge_estimators.hpp"
#include "netsample/evaluation.hpp"
#include "netsample/generator.hpp"
#include "netsample/samplers.hpp"

using namespace netsample;

namespace {

SampleStream manual_stream(const QueryContext& ctx, const std::vector<NodeId>& nodes,
                           const std::vector<double>& pi_hat) {
    SampleStream s;
    s.directed_graph = ctx.graph->directed();
    s.visibility = ctx.visibility;
    for (NodeId v : nodes) s.samples.push_back(ctx.query(v));
    s.pi_hat = pi_hat;
    return s;
}

double mass_sum(const EdgeDensityEstimate& d) {
    double s = 0.0;
    for (const auto& [l, m] : d.values) s += m;
    return s;
}

}  // namespace

TEST_CASE("traversal estimator: K3 degree pairs collapse to (2,2)") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}, false);
    LabelTable labels = LabelTable::uniform(3);
    QueryContext ctx{&g, &labels, Visibility::NbrDegrees};
    CostLedger ledger;
    SampleStream s = random_walk(ctx, ledger, 0, 100, 3);
    EdgeDensityEstimate d = estimate_edge_traversal(s, g, EdgeLabeler::degree_pair());
    REQUIRE(d.values.size() == 1);
    CHECK(d.values.at({2, 2}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("traversal estimator: star S5 is all (1,4)") {
    Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, false);
    LabelTable labels = LabelTable::uniform(5);
    QueryContext ctx{&g, &labels, Visibility::NbrDegrees};
    CostLedger ledger;
    SampleStream s = random_walk(ctx, ledger, 1, 100, 9);
    EdgeDensityEstimate d = estimate_edge_traversal(s, g, EdgeLabeler::degree_pair());
    REQUIRE(d.values.size() == 1);
    CHECK(d.values.at({1, 4}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("traversal estimator rejects UNI streams") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}, false);
    LabelTable labels = LabelTable::uniform(3);
    QueryContext ctx{&g, &labels, Visibility::NbrDegrees};
    CostLedger ledger;
    SampleStream s = uni_sample(ctx, ledger, 10, 1);
    CHECK_THROWS_AS(estimate_edge_traversal(s, g, EdgeLabeler::degree_pair()),
                    CapabilityError);
}

TEST_CASE("directed traversal: reciprocal pair fires both indicators") {
    Graph g = Graph::from_edges(2, {{0, 1}, {1, 0}}, true);
    LabelTable labels;
    labels.node_labels = {0, 1};
    labels.label_names = {"A", "B"};
    QueryContext ctx{&g, &labels, Visibility::NbrDegreesLabels};
    CostLedger ledger;
    SampleStream s = random_walk(ctx, ledger, 0, 4, 2);
    EdgeLabeler lab = EdgeLabeler::label_pair(labels, false);
    EdgeDensityEstimate d = estimate_edge_traversal_directed(s, g, lab);
    CHECK(d.normalizer == 8.0);  // 4 traversals, both arcs each
    CHECK(d.values.at({0, 1}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d.values.at({1, 0}) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("directed traversal: one-way edge contributes its arc label once") {
    Graph g = Graph::from_edges(2, {{0, 1}}, true);
    LabelTable labels;
    labels.node_labels = {0, 1};
    labels.label_names = {"A", "B"};
    QueryContext ctx{&g, &labels, Visibility::NbrDegreesLabels};
    CostLedger ledger;
    SampleStream s = random_walk(ctx, ledger, 0, 4, 2);
    EdgeLabeler lab = EdgeLabeler::label_pair(labels, false);
    EdgeDensityEstimate d = estimate_edge_traversal_directed(s, g, lab);
    CHECK(d.normalizer == 4.0);
    REQUIRE(d.values.size() == 1);
    CHECK(d.values.at({0, 1}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("neighbor estimator: P3 center sample sees only (1,2)") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}}, false);
    LabelTable labels = LabelTable::uniform(3);
    QueryContext ctx{&g, &labels, Visibility::NbrDegrees};
    SampleStream s = manual_stream(ctx, {1}, {2});
    EdgeDensityEstimate d = estimate_edge_neighbor(s, g, EdgeLabeler::degree_pair());
    REQUIRE(d.values.size() == 1);
    CHECK(d.values.at({1, 2}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("neighbor estimator works on UNI streams: K3 single sample") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}, false);
    LabelTable labels = LabelTable::uniform(3);
    QueryContext ctx{&g, &labels, Visibility::NbrDegrees};
    SampleStream s = manual_stream(ctx, {0}, {1});
    EdgeDensityEstimate d = estimate_edge_neighbor(s, g, EdgeLabeler::degree_pair());
    CHECK(d.values.at({2, 2}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("neighbor estimator normalizer equals the literal double sum") {
    SyntheticResult r = configuration_power_law(500, 2.6, 4);
    SubgraphResult lcc = largest_connected_component(r.graph);
    LabelTable labels = LabelTable::uniform(lcc.graph.node_count());
    QueryContext ctx{&lcc.graph, &labels, Visibility::NbrDegrees};
    CostLedger ledger;
    SampleStream s = frontier_sample(ctx, ledger, 4, nullptr, 300, 15);
    EdgeDensityEstimate d = estimate_edge_neighbor(s, lcc.graph, EdgeLabeler::degree_pair());
    double literal = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.samples[i].neighbors.size(); ++j)
            literal += 1.0 / s.pi_hat[i];
    CHECK(d.normalizer == doctest::Approx(literal).epsilon(1e-12));
}

TEST_CASE("exhaustive UNI stream makes the neighbor estimator exact") {
    SyntheticResult r = erdos_renyi(40, 0.2, 6);
    const Graph& g = r.graph;
    LabelTable labels = LabelTable::uniform(g.node_count());
    QueryContext ctx{&g, &labels, Visibility::NbrDegrees};
    std::vector<NodeId> all(g.node_count());
    std::iota(all.begin(), all.end(), 0);
    SampleStream s = manual_stream(ctx, all, std::vector<double>(all.size(), 1.0));
    EdgeLabeler lab = EdgeLabeler::degree_pair();
    EdgeDensityEstimate est = estimate_edge_neighbor(s, g, lab);
    EdgeDensityEstimate exact = exact_edge_density(g, lab, false);
    REQUIRE(est.values.size() == exact.values.size());
    for (const auto& [l, m] : exact.values)
        CHECK(est.values.at(l) == doctest::Approx(m).epsilon(1e-12));
}

TEST_CASE("directed neighbor estimator: reciprocal pair and one-way edge") {
    LabelTable labels;
    labels.node_labels = {0, 1};
    labels.label_names = {"A", "B"};

    Graph recip = Graph::from_edges(2, {{0, 1}, {1, 0}}, true);
    QueryContext c1{&recip, &labels, Visibility::NbrDegreesLabels};
    SampleStream s1 = manual_stream(c1, {0}, {1});
    EdgeLabeler lab = EdgeLabeler::label_pair(labels, false);
    EdgeDensityEstimate d1 = estimate_edge_neighbor_directed(s1, recip, lab);
    CHECK(d1.values.at({0, 1}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d1.values.at({1, 0}) == doctest::Approx(0.5).epsilon(1e-12));

    Graph oneway = Graph::from_edges(2, {{0, 1}}, true);
    QueryContext c2{&oneway, &labels, Visibility::NbrDegreesLabels};
    SampleStream s2 = manual_stream(c2, {0}, {1});
    EdgeDensityEstimate d2 = estimate_edge_neighbor_directed(s2, oneway, lab);
    REQUIRE(d2.values.size() == 1);
    CHECK(d2.values.at({0, 1}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("degree-pair labeler is symmetric everywhere") {
    SyntheticResult r = configuration_power_law(800, 2.5, 20);
    const Graph& g = r.graph;
    EdgeLabeler lab = EdgeLabeler::degree_pair();
    CHECK(lab.symmetric());
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u)) CHECK(lab(g, u, v) == lab(g, v, u));
}

TEST_CASE("labeler visibility is enforced") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}, false);
    LabelTable labels = LabelTable::uniform(3);
    QueryContext ctx{&g, &labels, Visibility::SelfOnly};
    SampleStream s = manual_stream(ctx, {0}, {1});
    CHECK_THROWS_AS(estimate_edge_neighbor(s, g, EdgeLabeler::degree_pair()),
                    CapabilityError);
    QueryContext degs{&g, &labels, Visibility::NbrDegrees};
    SampleStream s2 = manual_stream(degs, {0}, {1});
    CHECK_THROWS_AS(estimate_edge_neighbor(s2, g, EdgeLabeler::label_pair(labels, true)),
                    CapabilityError);
}

TEST_CASE("traversal and neighborhood estimates agree on a long run") {
    SyntheticResult r = erdos_renyi(60, 0.15, 8);
    SubgraphResult lcc = largest_connected_component(r.graph);
    LabelTable labels = LabelTable::uniform(lcc.graph.node_count());
    QueryContext ctx{&lcc.graph, &labels, Visibility::NbrDegrees};
    CostLedger ledger;
    SampleStream s = random_walk(ctx, ledger, 0, 200000, 44);
    EdgeLabeler lab = EdgeLabeler::degree_pair();
    EdgeDensityEstimate trav = estimate_edge_traversal(s, lcc.graph, lab);
    EdgeDensityEstimate nbr = estimate_edge_neighbor(s, lcc.graph, lab);
    double tv = 0.0;
    for (const auto& [l, m] : trav.values) {
        auto it = nbr.values.find(l);
        tv += std::abs(m - (it == nbr.values.end() ? 0.0 : it->second));
    }
    for (const auto& [l, m] : nbr.values)
        if (!trav.values.count(l)) tv += m;
    CHECK(0.5 * tv < 0.03);
}

TEST_CASE("all edge estimators normalize to 1") {
    SyntheticResult base = erdos_renyi(50, 0.2, 3);
    SubgraphResult lcc = largest_connected_component(base.graph);
    Graph g = orient_random(lcc.graph, 0.5, 4);
    LabelTable labels = LabelTable::random_categorical(g.node_count(), {0.6, 0.4},
                                                       {"A", "B"}, 5);
    QueryContext ctx{&g, &labels, Visibility::NbrDegreesLabels};
    CostLedger ledger;
    SampleStream s = random_walk(ctx, ledger, 0, 500, 6);
    EdgeLabeler deg = EdgeLabeler::degree_pair();
    EdgeLabeler lab = EdgeLabeler::label_pair(labels, false);
    CHECK(mass_sum(estimate_edge_traversal(s, g, deg)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mass_sum(estimate_edge_traversal_directed(s, g, lab)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mass_sum(estimate_edge_neighbor(s, g, deg)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mass_sum(estimate_edge_neighbor_directed(s, g, lab)) ==
          doctest::Approx(1.0).epsilon(1e-12));
}
