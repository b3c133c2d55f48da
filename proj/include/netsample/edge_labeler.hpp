#ifndef NETSAMPLE_EDGE_LABELER_HPP
#define NETSAMPLE_EDGE_LABELER_HPP

#include <compare>
#include <functional>
#include <map>
#include <string>

#include "netsample/access.hpp"
#include "netsample/graph.hpp"
#include "netsample/labels.hpp"

namespace netsample {

// Edge label as an ordered pair of ints; the labeler decides what the
// components mean (degrees, node label ids, ...).
struct EdgeLabel {
    int a = 0;
    int b = 0;
    auto operator<=>(const EdgeLabel&) const = default;
};

// Assigns a label to an edge (u,v). Symmetric labelers satisfy
// L'(u,v) = L'(v,u); directed labelers may not.
class EdgeLabeler {
public:
    enum class Mode { DegreePair, LabelPair, Custom };

    // (min degree, max degree) on the undirected view: the joint degree
    // distribution labeler.
    static EdgeLabeler degree_pair();

    // (L(u), L(v)) node-label pair; symmetric (min,max) on undirected
    // graphs, ordered on directed ones.
    static EdgeLabeler label_pair(const LabelTable& labels, bool symmetric);

    static EdgeLabeler custom(std::function<EdgeLabel(const Graph&, NodeId, NodeId)> fn,
                              bool symmetric, Visibility required,
                              std::function<std::string(EdgeLabel)> name = {});

    EdgeLabel operator()(const Graph& g, NodeId u, NodeId v) const { return fn_(g, u, v); }
    bool symmetric() const { return symmetric_; }
    // Minimum visibility for evaluating the label on edges incident to a
    // sampled node from its reply alone.
    Visibility required_visibility() const { return required_; }
    std::string name(EdgeLabel l) const;

private:
    std::function<EdgeLabel(const Graph&, NodeId, NodeId)> fn_;
    std::function<std::string(EdgeLabel)> name_;
    bool symmetric_ = true;
    Visibility required_ = Visibility::NbrDegrees;
};

using EdgeMass = std::map<EdgeLabel, double>;

}  // namespace netsample

#endif
