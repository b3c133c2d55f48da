#include "netsample/labels.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace netsample {

namespace {

LabelTable degree_bins(const Graph& g, bool in_degree) {
    LabelTable t;
    t.numeric = true;
    t.node_labels.resize(g.node_count());
    int max_deg = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        int d = in_degree ? g.in_degree(v) : g.degree(v);
        t.node_labels[v] = d;
        max_deg = std::max(max_deg, d);
    }
    t.label_names.reserve(max_deg + 1);
    for (int d = 0; d <= max_deg; ++d) t.label_names.push_back(std::to_string(d));
    return t;
}

}  // namespace

LabelTable LabelTable::by_degree(const Graph& g) { return degree_bins(g, false); }

LabelTable LabelTable::by_in_degree(const Graph& g) { return degree_bins(g, true); }

LabelTable LabelTable::uniform(NodeId n, const std::string& name) {
    LabelTable t;
    t.node_labels.assign(n, 0);
    t.label_names = {name};
    return t;
}

LabelTable LabelTable::random_categorical(NodeId n, const std::vector<double>& masses,
                                          const std::vector<std::string>& names,
                                          std::uint64_t seed) {
    if (masses.size() != names.size() || masses.empty())
        throw std::invalid_argument("random_categorical: masses/names mismatch");
    std::mt19937_64 rng(seed);
    std::discrete_distribution<int> dist(masses.begin(), masses.end());
    LabelTable t;
    t.label_names = names;
    t.node_labels.resize(n);
    for (NodeId v = 0; v < n; ++v) t.node_labels[v] = dist(rng);
    return t;
}

LabelTable LabelTable::from_file(const std::string& path,
                                 const std::vector<std::int64_t>& original_ids) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open label file: " + path);

    std::unordered_map<std::int64_t, NodeId> dense;
    for (std::size_t i = 0; i < original_ids.size(); ++i)
        dense.emplace(original_ids[i], static_cast<NodeId>(i));

    LabelTable t;
    t.node_labels.assign(original_ids.size(), -1);
    std::unordered_map<std::string, int> label_ids;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        std::int64_t id;
        std::string label;
        if (!(ls >> id >> label))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": malformed label line");
        auto it = dense.find(id);
        if (it == dense.end()) continue;  // label for a node outside the graph
        auto [lit, inserted] = label_ids.emplace(label, static_cast<int>(t.label_names.size()));
        if (inserted) t.label_names.push_back(label);
        t.node_labels[it->second] = lit->second;
    }
    for (std::size_t v = 0; v < t.node_labels.size(); ++v) {
        if (t.node_labels[v] < 0)
            throw std::runtime_error(path + ": node " + std::to_string(original_ids[v]) +
                                     " has no label");
    }
    return t;
}

}  // namespace netsample
