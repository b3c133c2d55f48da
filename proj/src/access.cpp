#include "netsample/access.hpp"

#include <algorithm>

namespace netsample {

std::string to_string(Visibility v) {
    switch (v) {
        case Visibility::SelfOnly: return "self-only";
        case Visibility::NbrDegrees: return "nbr-degrees";
        case Visibility::NbrDegreesLabels: return "nbr-degrees-labels";
        case Visibility::OutNbrWithInDeg: return "out-nbr-with-indeg";
    }
    return "?";
}

Visibility visibility_from_string(const std::string& s) {
    if (s == "self-only") return Visibility::SelfOnly;
    if (s == "nbr-degrees") return Visibility::NbrDegrees;
    if (s == "nbr-degrees-labels") return Visibility::NbrDegreesLabels;
    if (s == "out-nbr-with-indeg") return Visibility::OutNbrWithInDeg;
    throw std::invalid_argument("unknown visibility: " + s);
}

bool visibility_grants(Visibility have, Visibility need) {
    switch (need) {
        case Visibility::SelfOnly:
            return true;
        case Visibility::NbrDegrees:
            return have == Visibility::NbrDegrees || have == Visibility::NbrDegreesLabels;
        case Visibility::NbrDegreesLabels:
            return have == Visibility::NbrDegreesLabels;
        case Visibility::OutNbrWithInDeg:
            return have == Visibility::OutNbrWithInDeg;
    }
    return false;
}

NodeReply QueryContext::query(NodeId v) const {
    const Graph& g = *graph;
    NodeReply r;
    r.node = v;
    r.visibility = visibility;
    r.label = labels ? labels->label_of(v) : 0;
    r.degree = g.degree(v);
    if (g.directed()) {
        r.in_degree = g.in_degree(v);
        r.out_degree = g.out_degree(v);
    }

    r.neighbors.reserve(g.neighbors(v).size());
    for (NodeId w : g.neighbors(v)) {
        NeighborInfo info;
        info.id = w;
        if (g.directed()) {
            info.is_out = g.has_directed_edge(v, w);
            info.is_in = g.has_directed_edge(w, v);
        } else {
            info.is_out = info.is_in = true;
        }
        switch (visibility) {
            case Visibility::SelfOnly:
                break;
            case Visibility::NbrDegreesLabels:
                info.label = labels ? labels->label_of(w) : 0;
                [[fallthrough]];
            case Visibility::NbrDegrees:
                info.degree = g.degree(w);
                if (g.directed()) {
                    info.in_degree = g.in_degree(w);
                    info.out_degree = g.out_degree(w);
                }
                break;
            case Visibility::OutNbrWithInDeg:
                if (info.is_out) {
                    info.in_degree = g.directed() ? g.in_degree(w) : g.degree(w);
                    info.label = labels ? labels->label_of(w) : 0;
                }
                break;
        }
        r.neighbors.push_back(info);
    }
    return r;
}

}  // namespace netsample
