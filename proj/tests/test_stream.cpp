#include <doctest.h>

#include <sstream>

#include "netsample/generator.hpp"
#include "netsample/samplers.hpp"
#include "netsample/stream.hpp"

using namespace netsample;

namespace {

void check_round_trip(const SampleStream& s) {
    std::ostringstream first;
    s.save(first);
    std::istringstream in(first.str());
    SampleStream loaded = SampleStream::load(in);
    std::ostringstream second;
    loaded.save(second);
    CHECK(first.str() == second.str());

    CHECK(loaded.method == s.method);
    CHECK(loaded.pi_hat_rule == s.pi_hat_rule);
    CHECK(loaded.seed == s.seed);
    CHECK(loaded.directed_graph == s.directed_graph);
    CHECK(loaded.visibility == s.visibility);
    CHECK(loaded.exhausted == s.exhausted);
    REQUIRE(loaded.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(loaded.samples[i].node == s.samples[i].node);
        CHECK(loaded.samples[i].label == s.samples[i].label);
        CHECK(loaded.samples[i].degree == s.samples[i].degree);
        CHECK(loaded.samples[i].in_degree == s.samples[i].in_degree);
        CHECK(loaded.samples[i].out_degree == s.samples[i].out_degree);
        CHECK(loaded.pi_hat[i] == s.pi_hat[i]);
        REQUIRE(loaded.samples[i].neighbors.size() == s.samples[i].neighbors.size());
        for (std::size_t j = 0; j < s.samples[i].neighbors.size(); ++j) {
            const NeighborInfo& a = loaded.samples[i].neighbors[j];
            const NeighborInfo& b = s.samples[i].neighbors[j];
            CHECK(a.id == b.id);
            CHECK(a.is_in == b.is_in);
            CHECK(a.is_out == b.is_out);
            CHECK(a.degree == b.degree);
            CHECK(a.in_degree == b.in_degree);
            CHECK(a.out_degree == b.out_degree);
            CHECK(a.label == b.label);
        }
    }
    CHECK(loaded.traversed_edges == s.traversed_edges);
}

}  // namespace

TEST_CASE("stream round-trip across methods and visibility levels") {
    SyntheticResult base = erdos_renyi(40, 0.2, 14);
    SubgraphResult lcc = largest_connected_component(base.graph);
    Graph directed = orient_random(lcc.graph, 0.4, 15);
    LabelTable labels = LabelTable::random_categorical(directed.node_count(), {0.7, 0.3},
                                                       {"A", "B"}, 16);
    for (Visibility vis : {Visibility::SelfOnly, Visibility::NbrDegrees,
                           Visibility::NbrDegreesLabels, Visibility::OutNbrWithInDeg}) {
        QueryContext ctx{&directed, &labels, vis};
        CostLedger l1;
        check_round_trip(uni_sample(ctx, l1, 25, 7));
        CostLedger l2;
        check_round_trip(random_walk(ctx, l2, 0, 40, 8));
        CostLedger l3;
        check_round_trip(frontier_sample(ctx, l3, 3, nullptr, 40, 9));
        if (vis == Visibility::NbrDegrees || vis == Visibility::NbrDegreesLabels) {
            CostLedger l4;
            check_round_trip(weighted_random_walk(ctx, l4, 0, 40, 0.5, true, 10));
        }
    }
}

TEST_CASE("stream round-trip preserves awkward pi_hat values") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}}, false);
    LabelTable labels = LabelTable::uniform(3);
    QueryContext ctx{&g, &labels, Visibility::SelfOnly};
    SampleStream s;
    s.visibility = ctx.visibility;
    s.samples.push_back(ctx.query(1));
    s.pi_hat.push_back(1.0 / 3.0);  // not exactly representable in decimal
    check_round_trip(s);
}

TEST_CASE("exhausted flag survives the round trip") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}, false);
    LabelTable labels = LabelTable::uniform(3);
    QueryContext ctx{&g, &labels, Visibility::SelfOnly};
    CostLedger ledger(4.0);
    SampleStream s = random_walk(ctx, ledger, 0, 10, 3);
    CHECK(s.exhausted);
    check_round_trip(s);
}

TEST_CASE("enum names round-trip") {
    CHECK(visibility_from_string(to_string(Visibility::OutNbrWithInDeg)) ==
          Visibility::OutNbrWithInDeg);
    CHECK(to_string(Method::FS) == "FS");
    CHECK(to_string(PiHatRule::DegreeProportional).size() > 0);
}
