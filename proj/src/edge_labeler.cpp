#include "netsample/edge_labeler.hpp"

#include <algorithm>

namespace netsample {

EdgeLabeler EdgeLabeler::degree_pair() {
    EdgeLabeler l;
    l.fn_ = [](const Graph& g, NodeId u, NodeId v) {
        int du = g.degree(u), dv = g.degree(v);
        return EdgeLabel{std::min(du, dv), std::max(du, dv)};
    };
    l.symmetric_ = true;
    l.required_ = Visibility::NbrDegrees;
    l.name_ = [](EdgeLabel e) {
        return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    };
    return l;
}

EdgeLabeler EdgeLabeler::label_pair(const LabelTable& labels, bool symmetric) {
    EdgeLabeler l;
    const LabelTable* lt = &labels;
    if (symmetric) {
        l.fn_ = [lt](const Graph&, NodeId u, NodeId v) {
            int a = lt->label_of(u), b = lt->label_of(v);
            return EdgeLabel{std::min(a, b), std::max(a, b)};
        };
    } else {
        l.fn_ = [lt](const Graph&, NodeId u, NodeId v) {
            return EdgeLabel{lt->label_of(u), lt->label_of(v)};
        };
    }
    l.symmetric_ = symmetric;
    l.required_ = Visibility::NbrDegreesLabels;
    l.name_ = [lt](EdgeLabel e) {
        return lt->label_names[e.a] + "->" + lt->label_names[e.b];
    };
    return l;
}

EdgeLabeler EdgeLabeler::custom(std::function<EdgeLabel(const Graph&, NodeId, NodeId)> fn,
                                bool symmetric, Visibility required,
                                std::function<std::string(EdgeLabel)> name) {
    EdgeLabeler l;
    l.fn_ = std::move(fn);
    l.symmetric_ = symmetric;
    l.required_ = required;
    l.name_ = std::move(name);
    return l;
}

std::string EdgeLabeler::name(EdgeLabel e) const {
    if (name_) return name_(e);
    return std::to_string(e.a) + "-" + std::to_string(e.b);
}

}  // namespace netsample
