#ifndef NETSAMPLE_ACCESS_HPP
#define NETSAMPLE_ACCESS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "netsample/graph.hpp"
#include "netsample/labels.hpp"

namespace netsample {

// Thrown when an estimator or sampler needs information the configured
// visibility level does not grant.
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// What one node query reveals about each neighbor, for free.
//   SelfOnly          - neighbor ids and link direction only
//   NbrDegrees        - plus each neighbor's degree (in/out on directed graphs)
//   NbrDegreesLabels  - plus each neighbor's label
//   OutNbrWithInDeg   - annotations restricted to out-neighbors, which carry
//                       in-degree and label (the citation-graph regime)
enum class Visibility { SelfOnly, NbrDegrees, NbrDegreesLabels, OutNbrWithInDeg };

std::string to_string(Visibility v);
Visibility visibility_from_string(const std::string& s);

// Whether level `have` grants everything level `need` grants.
bool visibility_grants(Visibility have, Visibility need);

struct NeighborInfo {
    NodeId id = -1;
    bool is_in = false;
    bool is_out = false;
    std::optional<int> degree;
    std::optional<int> in_degree;
    std::optional<int> out_degree;
    std::optional<int> label;
};

// The reply to one node query. Fields not granted by the visibility level
// are absent; consumers must fail on absent fields rather than read zeros.
struct NodeReply {
    NodeId node = -1;
    int label = -1;
    int degree = 0;
    std::optional<int> in_degree;
    std::optional<int> out_degree;
    std::vector<NeighborInfo> neighbors;
    Visibility visibility = Visibility::SelfOnly;
};

// Bundles the graph, labels, and visibility level behind which all sampling
// runs. The graph and labels are immutable; a context is freely shared.
struct QueryContext {
    const Graph* graph = nullptr;
    const LabelTable* labels = nullptr;
    Visibility visibility = Visibility::SelfOnly;

    NodeReply query(NodeId v) const;
};

}  // namespace netsample

#endif
