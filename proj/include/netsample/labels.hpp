#ifndef NETSAMPLE_LABELS_HPP
#define NETSAMPLE_LABELS_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "netsample/graph.hpp"

namespace netsample {

// One label per node, dense label ids 0..K-1. `numeric` marks label domains
// that are ordered integer bins (degrees), where label id == bin value.
struct LabelTable {
    std::vector<int> node_labels;
    std::vector<std::string> label_names;
    bool numeric = false;

    int label_count() const { return static_cast<int>(label_names.size()); }
    int label_of(NodeId v) const { return node_labels[v]; }

    static LabelTable by_degree(const Graph& g);
    static LabelTable by_in_degree(const Graph& g);
    static LabelTable uniform(NodeId n, const std::string& name = "all");

    // i.i.d. categorical labels with the given masses; masses must sum to 1.
    static LabelTable random_categorical(NodeId n, const std::vector<double>& masses,
                                         const std::vector<std::string>& names,
                                         std::uint64_t seed);

    // "node_id label_string" per line, '#' comments ignored. `original_ids`
    // maps dense ids back to file ids (from load_edge_list); every graph
    // node must receive a label.
    static LabelTable from_file(const std::string& path,
                                const std::vector<std::int64_t>& original_ids);
};

}  // namespace netsample

#endif
