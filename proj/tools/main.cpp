// netsample command-line front end: dataset plumbing, samplers, estimators,
// detection, short paths, and the Monte Carlo evaluation harness.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "netsample/detection.hpp"
#include "netsample/edge_estimators.hpp"
#include "netsample/evaluation.hpp"
#include "netsample/generator.hpp"
#include "netsample/graph.hpp"
#include "netsample/labels.hpp"
#include "netsample/rng.hpp"
#include "netsample/samplers.hpp"
#include "netsample/shortpath.hpp"

namespace fs = std::filesystem;
using namespace netsample;

namespace {

struct GlobalOpts {
    std::string graph_path;
    bool directed = false;
    bool no_lcc = false;
    std::string labels_path;
    std::string label_scheme = "degree";  // degree|in-degree|uniform|file
    std::uint64_t seed = 1;
    std::string output_dir = ".";
    std::string visibility = "nbr-degrees-labels";
    std::size_t jobs = 1;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "0.001V" resolves against the post-LCC node count; plain integers pass
// through.
std::size_t resolve_budget(const std::string& spec, NodeId node_count) {
    if (spec.empty()) throw ConfigError("empty budget");
    if (spec.back() == 'V' || spec.back() == 'v') {
        double frac = std::stod(spec.substr(0, spec.size() - 1));
        if (frac <= 0.0) throw ConfigError("budget fraction must be > 0");
        auto b = static_cast<std::size_t>(frac * node_count);
        return b < 1 ? 1 : b;
    }
    long long b = std::stoll(spec);
    if (b < 1) throw ConfigError("budget must be >= 1");
    return static_cast<std::size_t>(b);
}

struct LoadedGraph {
    Graph graph;
    std::vector<std::int64_t> original_ids;
    BuildStats stats;
    std::size_t pre_lcc_nodes = 0;
};

LoadedGraph load_graph(const GlobalOpts& g) {
    if (g.graph_path.empty()) throw ConfigError("--graph is required");
    LoadResult r = load_edge_list(g.graph_path, g.directed);
    LoadedGraph out;
    out.stats = r.stats;
    out.pre_lcc_nodes = r.original_ids.size();
    if (g.no_lcc) {
        out.graph = std::move(r.graph);
        out.original_ids = std::move(r.original_ids);
    } else {
        SubgraphResult lcc = largest_connected_component(r.graph);
        out.graph = std::move(lcc.graph);
        out.original_ids.reserve(lcc.parent_ids.size());
        for (NodeId v : lcc.parent_ids) out.original_ids.push_back(r.original_ids[v]);
    }
    return out;
}

LabelTable make_label_table(const GlobalOpts& g, const LoadedGraph& lg) {
    if (g.label_scheme == "file" || !g.labels_path.empty()) {
        if (g.labels_path.empty()) throw ConfigError("--labels file required for scheme 'file'");
        return LabelTable::from_file(g.labels_path, lg.original_ids);
    }
    if (g.label_scheme == "degree") return LabelTable::by_degree(lg.graph);
    if (g.label_scheme == "in-degree") {
        if (!lg.graph.directed()) throw ConfigError("in-degree labels need --directed");
        return LabelTable::by_in_degree(lg.graph);
    }
    if (g.label_scheme == "uniform") return LabelTable::uniform(lg.graph.node_count());
    throw ConfigError("unknown label scheme: " + g.label_scheme);
}

void write_sidecar(const GlobalOpts& g, const std::string& subcommand,
                   const std::map<std::string, std::string>& extra) {
    fs::create_directories(g.output_dir);
    std::ofstream out(fs::path(g.output_dir) / (subcommand + "-config.txt"));
    out << "subcommand=" << subcommand << "\n";
    out << "graph=" << g.graph_path << "\n";
    out << "directed=" << g.directed << "\n";
    out << "lcc=" << !g.no_lcc << "\n";
    out << "labels=" << g.labels_path << "\n";
    out << "label_scheme=" << g.label_scheme << "\n";
    out << "seed=" << g.seed << "\n";
    out << "visibility=" << g.visibility << "\n";
    out << "output_dir=" << g.output_dir << "\n";
    out << "jobs=" << g.jobs << "\n";
    for (const auto& [k, v] : extra) out << k << "=" << v << "\n";
}

std::ofstream open_output(const GlobalOpts& g, const std::string& name) {
    fs::create_directories(g.output_dir);
    std::ofstream out(fs::path(g.output_dir) / name);
    if (!out) throw std::runtime_error("cannot write output file: " + name);
    return out;
}

Method method_from(const std::string& s) {
    if (s == "uni") return Method::UNI;
    if (s == "rw") return Method::RW;
    if (s == "fs") return Method::FS;
    if (s == "wrw") return Method::WRW;
    throw ConfigError("unknown method: " + s);
}

NodeEstimatorId node_estimator_from(const std::string& s) {
    if (s == "simple") return NodeEstimatorId::Simple;
    if (s == "neighbor") return NodeEstimatorId::Neighbor;
    if (s == "mixture") return NodeEstimatorId::Mixture;
    if (s == "directed-neighbor") return NodeEstimatorId::DirectedNeighbor;
    if (s == "out-neighbor") return NodeEstimatorId::OutNeighbor;
    throw ConfigError("unknown estimator: " + s);
}

int cmd_stats(const GlobalOpts& g) {
    LoadedGraph lg = load_graph(g);
    const Graph& gr = lg.graph;
    std::size_t degsum = 0;
    int maxdeg = 0;
    for (NodeId v = 0; v < gr.node_count(); ++v) {
        degsum += gr.degree(v);
        maxdeg = std::max(maxdeg, gr.degree(v));
    }
    std::cout << "nodes=" << gr.node_count() << " (pre-lcc " << lg.pre_lcc_nodes << ")\n"
              << "edges=" << gr.edge_count()
              << " directed_edges=" << gr.directed_edge_count() << "\n"
              << "self_loops_dropped=" << lg.stats.self_loops_dropped
              << " duplicates_dropped=" << lg.stats.duplicates_dropped << "\n"
              << "avg_degree=" << static_cast<double>(degsum) / gr.node_count()
              << " max_degree=" << maxdeg << "\n";
    write_sidecar(g, "stats", {});
    std::ofstream idmap = open_output(g, "id_map.csv");
    idmap << "original_id,dense_id\n";
    for (std::size_t i = 0; i < lg.original_ids.size(); ++i)
        idmap << lg.original_ids[i] << "," << i << "\n";
    return 0;
}

int cmd_generate(const GlobalOpts& g, const std::string& kind, NodeId n, double param,
                 const std::string& out_path, double reciprocal) {
    SyntheticKind k;
    if (kind == "er") k = SyntheticKind::ErdosRenyi;
    else if (kind == "power-law") k = SyntheticKind::ConfigurationPowerLaw;
    else throw ConfigError("unknown kind: " + kind);
    SyntheticResult r = generate_synthetic(k, n, param, g.seed);
    Graph out = r.graph;
    if (g.directed) out = orient_random(r.graph, reciprocal, derive_seed(g.seed, 1));
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << "# generated " << kind << " n=" << n << " param=" << param
      << " seed=" << g.seed << "\n";
    if (out.directed()) {
        for (NodeId u = 0; u < out.node_count(); ++u)
            for (NodeId v : out.out_neighbors(u)) f << u << " " << v << "\n";
    } else {
        for (NodeId u = 0; u < out.node_count(); ++u)
            for (NodeId v : out.neighbors(u))
                if (u < v) f << u << " " << v << "\n";
    }
    std::cout << "wrote " << out_path << " lcc_fraction=" << r.lcc_fraction << "\n";
    write_sidecar(g, "generate",
                  {{"kind", kind},
                   {"n", std::to_string(n)},
                   {"param", std::to_string(param)},
                   {"out", out_path}});
    return 0;
}

int cmd_sample(const GlobalOpts& g, const std::string& method, const std::string& budget,
               std::size_t walkers, double cost_c, double beta, const std::string& out_name) {
    LoadedGraph lg = load_graph(g);
    LabelTable labels = make_label_table(g, lg);
    QueryContext ctx{&lg.graph, &labels, visibility_from_string(g.visibility)};
    std::size_t n = resolve_budget(budget, lg.graph.node_count());
    CostLedger ledger(CostLedger::kUnlimited, cost_c);

    SampleStream s;
    Method m = method_from(method);
    std::mt19937_64 rng = make_rng(g.seed, 0xC11);
    std::uniform_int_distribution<NodeId> pick(0, lg.graph.node_count() - 1);
    auto start = [&]() {
        NodeId v = pick(rng);
        while (lg.graph.degree(v) == 0) v = pick(rng);
        return v;
    };
    switch (m) {
        case Method::UNI: s = uni_sample(ctx, ledger, n, g.seed); break;
        case Method::RW: s = random_walk(ctx, ledger, start(), n, g.seed); break;
        case Method::FS: s = frontier_sample(ctx, ledger, walkers, nullptr, n, g.seed); break;
        case Method::WRW:
            s = weighted_random_walk(ctx, ledger, start(), n, beta, false, g.seed);
            break;
    }
    fs::create_directories(g.output_dir);
    s.save_file((fs::path(g.output_dir) / out_name).string());
    std::cout << "samples=" << s.size() << " spent_crawl=" << ledger.spent_crawl()
              << " spent_uni=" << ledger.spent_uni_attempts() << "\n";
    write_sidecar(g, "sample",
                  {{"method", method},
                   {"budget", budget},
                   {"budget_resolved", std::to_string(n)},
                   {"walkers", std::to_string(walkers)},
                   {"cost_c", std::to_string(cost_c)},
                   {"beta", std::to_string(beta)},
                   {"out", out_name}});
    return 0;
}

int cmd_estimate_node(const GlobalOpts& g, const std::string& method,
                      const std::string& estimator, const std::string& budget,
                      std::size_t runs, std::size_t walkers, double cost_c, double beta,
                      double gamma, std::size_t subsets) {
    LoadedGraph lg = load_graph(g);
    LabelTable labels = make_label_table(g, lg);

    TrialConfig cfg;
    cfg.graph = &lg.graph;
    cfg.labels = &labels;
    cfg.method = method_from(method);
    cfg.estimator = node_estimator_from(estimator);
    cfg.visibility = visibility_from_string(g.visibility);
    cfg.budget = resolve_budget(budget, lg.graph.node_count());
    cfg.runs = runs;
    cfg.seed = g.seed;
    cfg.uni_cost = cost_c;
    cfg.walkers = walkers;
    cfg.beta = beta;
    cfg.gamma = gamma;
    cfg.subset_count = subsets;
    cfg.jobs = g.jobs;

    TrialResult result = run_trials(cfg);
    std::ofstream nm = open_output(g, "nmse.csv");
    write_nmse_csv(nm, result.metrics, labels);
    std::ofstream rr = open_output(g, "runs.csv");
    write_runs_csv(rr, result.runs, labels);
    std::ofstream dd = open_output(g, "density.csv");
    write_density_csv(dd, exact_node_density(lg.graph, labels), labels);
    std::cout << "runs=" << runs << " budget=" << cfg.budget
              << " labels_reported=" << result.metrics.size() << "\n";
    write_sidecar(g, "estimate-node",
                  {{"method", method},
                   {"estimator", estimator},
                   {"budget", budget},
                   {"budget_resolved", std::to_string(cfg.budget)},
                   {"runs", std::to_string(runs)},
                   {"walkers", std::to_string(walkers)},
                   {"cost_c", std::to_string(cost_c)},
                   {"beta", std::to_string(beta)},
                   {"gamma", std::to_string(gamma)},
                   {"subsets", std::to_string(subsets)}});
    return 0;
}

int cmd_estimate_edge(const GlobalOpts& g, const std::string& method,
                      const std::string& estimator, const std::string& budget,
                      std::size_t runs, std::size_t walkers) {
    LoadedGraph lg = load_graph(g);
    LabelTable labels = make_label_table(g, lg);
    Visibility vis = visibility_from_string(g.visibility);
    QueryContext ctx{&lg.graph, &labels, vis};
    std::size_t n = resolve_budget(budget, lg.graph.node_count());
    EdgeLabeler labeler = EdgeLabeler::degree_pair();

    bool directed_est = estimator == "traversal-directed" || estimator == "neighbor-directed";
    bool traversal = estimator == "traversal" || estimator == "traversal-directed";
    if (!traversal && estimator != "neighbor" && estimator != "neighbor-directed")
        throw ConfigError("unknown edge estimator: " + estimator);

    EdgeDensityEstimate truth =
        exact_edge_density(lg.graph, labeler, directed_est && lg.graph.directed());
    std::ofstream deltas = open_output(g, "edge_delta.csv");
    deltas << "run,delta\n";
    Method m = method_from(method);
    EdgeDensityEstimate last;
    for (std::size_t r = 0; r < runs; ++r) {
        std::uint64_t rs = derive_seed(g.seed, r + 1);
        CostLedger ledger;
        std::mt19937_64 rng = make_rng(rs, 0xE);
        std::uniform_int_distribution<NodeId> pick(0, lg.graph.node_count() - 1);
        NodeId s0 = pick(rng);
        while (lg.graph.degree(s0) == 0) s0 = pick(rng);
        SampleStream stream;
        switch (m) {
            case Method::UNI: stream = uni_sample(ctx, ledger, n, rs); break;
            case Method::RW: stream = random_walk(ctx, ledger, s0, n, rs); break;
            case Method::FS: stream = frontier_sample(ctx, ledger, walkers, nullptr, n, rs); break;
            case Method::WRW:
                stream = weighted_random_walk(ctx, ledger, s0, n, 0.5, false, rs);
                break;
        }
        if (estimator == "traversal") last = estimate_edge_traversal(stream, lg.graph, labeler);
        else if (estimator == "traversal-directed")
            last = estimate_edge_traversal_directed(stream, lg.graph, labeler);
        else if (estimator == "neighbor")
            last = estimate_edge_neighbor(stream, lg.graph, labeler);
        else last = estimate_edge_neighbor_directed(stream, lg.graph, labeler);
        deltas << r << "," << delta_metric(last, truth) << "\n";
    }
    std::ofstream ed = open_output(g, "edge_density.csv");
    write_edge_density_csv(ed, last, labeler);
    std::cout << "runs=" << runs << " budget=" << n << "\n";
    write_sidecar(g, "estimate-edge",
                  {{"method", method},
                   {"estimator", estimator},
                   {"budget", budget},
                   {"budget_resolved", std::to_string(n)},
                   {"runs", std::to_string(runs)}});
    return 0;
}

int cmd_detect(const GlobalOpts& g, const std::string& method, const std::string& budget,
               std::size_t top_n, std::size_t seeds, double beta) {
    LoadedGraph lg = load_graph(g);
    LabelTable labels = make_label_table(g, lg);
    QueryContext ctx{&lg.graph, &labels, visibility_from_string(g.visibility)};
    std::size_t b = resolve_budget(budget, lg.graph.node_count());

    std::ofstream out = open_output(g, "detection.csv");
    out << "seed_index,method,budget,recall,spent\n";
    double mean_recall = 0.0;
    for (std::size_t t = 0; t < seeds; ++t) {
        std::uint64_t rs = derive_seed(g.seed, t + 1);
        std::mt19937_64 rng = make_rng(rs, 0xD);
        std::uniform_int_distribution<NodeId> pick(0, lg.graph.node_count() - 1);
        NodeId s0 = pick(rng);
        while (lg.graph.degree(s0) == 0) s0 = pick(rng);
        CostLedger ledger(static_cast<double>(b));
        DetectionResult det;
        if (method == "mxs") det = mxs_detect(ctx, s0, top_n, false, ledger);
        else if (method == "xs") det = xs_detect(ctx, s0, top_n, ledger);
        else if (method == "wrw") det = wrw_detect(ctx, s0, top_n, beta, ledger, rs);
        else if (method == "rw") {
            SampleStream s = random_walk(ctx, ledger, s0, b, rs);
            det = detect_from_stream(s, top_n);
        } else {
            throw ConfigError("unknown detection method: " + method);
        }
        double rec = detection_recall(det, lg.graph, top_n);
        mean_recall += rec / seeds;
        out << t << "," << method << "," << b << "," << rec << ","
            << ledger.total_spent() << "\n";
    }
    std::cout << "mean_recall=" << mean_recall << " over " << seeds << " seeds\n";
    write_sidecar(g, "detect",
                  {{"method", method},
                   {"budget", budget},
                   {"budget_resolved", std::to_string(b)},
                   {"top", std::to_string(top_n)},
                   {"seeds", std::to_string(seeds)},
                   {"beta", std::to_string(beta)}});
    return 0;
}

int cmd_shortpath(const GlobalOpts& g, const std::string& strategy, std::size_t budget_b,
                  std::size_t pairs, double beta) {
    LoadedGraph lg = load_graph(g);
    LabelTable labels = make_label_table(g, lg);
    QueryContext ctx{&lg.graph, &labels, visibility_from_string(g.visibility)};
    PathStrategy st;
    if (strategy == "rw") st = PathStrategy::RW;
    else if (strategy == "wrw") st = PathStrategy::WRW;
    else if (strategy == "mxs") st = PathStrategy::MXS;
    else throw ConfigError("unknown strategy: " + strategy);

    std::ofstream out = open_output(g, "paths.csv");
    out << "u,v,true_d,d_star,found,strategy,B\n";
    std::mt19937_64 rng = make_rng(g.seed, 0x5A);
    std::uniform_int_distribution<NodeId> pick(0, lg.graph.node_count() - 1);
    std::size_t failures = 0, done = 0;
    while (done < pairs) {
        NodeId u = pick(rng), v = pick(rng);
        if (u == v || lg.graph.degree(u) == 0 || lg.graph.degree(v) == 0) continue;
        std::size_t d = exact_distance(lg.graph, u, v);
        if (d == kUnreachable) continue;
        CostLedger ledger;
        PathResult r = discover_short_path(ctx, u, v, budget_b, st, beta, ledger,
                                           derive_seed(g.seed, done + 1));
        out << u << "," << v << "," << d << ",";
        if (r.found) out << r.d_star;
        else out << "inf";
        out << "," << r.found << "," << strategy << "," << budget_b << "\n";
        if (!r.found) ++failures;
        ++done;
    }
    std::cout << "pairs=" << pairs << " failures=" << failures << " failure_fraction="
              << static_cast<double>(failures) / pairs << "\n";
    write_sidecar(g, "shortpath",
                  {{"strategy", strategy},
                   {"budget_b", std::to_string(budget_b)},
                   {"pairs", std::to_string(pairs)},
                   {"beta", std::to_string(beta)}});
    return 0;
}

// key=value file with the estimate-node option names.
int cmd_eval(GlobalOpts g, const std::string& config_path) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config: " + config_path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("bad config line: " + line);
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    auto get = [&](const std::string& k, const std::string& dflt) {
        auto it = kv.find(k);
        return it == kv.end() ? dflt : it->second;
    };
    if (kv.count("graph")) g.graph_path = kv["graph"];
    if (kv.count("directed")) g.directed = kv["directed"] == "1";
    if (kv.count("seed")) g.seed = std::stoull(kv["seed"]);
    if (kv.count("visibility")) g.visibility = kv["visibility"];
    if (kv.count("label_scheme")) g.label_scheme = kv["label_scheme"];
    if (kv.count("labels")) g.labels_path = kv["labels"];
    return cmd_estimate_node(g, get("method", "fs"), get("estimator", "simple"),
                             get("budget", "0.001V"), std::stoull(get("runs", "1000")),
                             std::stoull(get("walkers", "100")),
                             std::stod(get("cost_c", "1")), std::stod(get("beta", "0.5")),
                             std::stod(get("gamma", "1")),
                             std::stoull(get("subsets", "100")));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph sampling and estimation toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("NETSAMPLE_OUTPUT_DIR")) g.output_dir = env;
    app.add_option("--graph", g.graph_path, "edge list file");
    app.add_flag("--directed", g.directed, "treat the edge list as directed");
    app.add_flag("--no-lcc", g.no_lcc, "skip largest-component extraction");
    app.add_option("--labels", g.labels_path, "node label file");
    app.add_option("--label-scheme", g.label_scheme,
                   "degree|in-degree|uniform|file (default degree)");
    app.add_option("--seed", g.seed, "master RNG seed");
    app.add_option("--output-dir", g.output_dir, "output directory");
    app.add_option("--visibility", g.visibility,
                   "self-only|nbr-degrees|nbr-degrees-labels|out-nbr-with-indeg");
    app.add_option("--jobs", g.jobs, "worker threads for trial runs");

    auto* stats = app.add_subcommand("stats", "graph summary and id map");
    stats->fallthrough();

    std::string kind = "power-law", out_path = "graph.txt";
    NodeId gen_n = 5000;
    double gen_param = 2.5, reciprocal = 0.3;
    auto* generate = app.add_subcommand("generate", "write a synthetic edge list");
    generate->fallthrough();
    generate->add_option("--kind", kind, "er|power-law");
    generate->add_option("--nodes", gen_n, "node count");
    generate->add_option("--param", gen_param, "p (er) or exponent (power-law)");
    generate->add_option("--out", out_path, "output edge list path");
    generate->add_option("--reciprocal", reciprocal,
                         "reciprocal edge probability when --directed");

    std::string method = "fs", budget = "0.001V", stream_out = "stream.txt";
    std::size_t walkers = 100;
    double cost_c = 1.0, beta = 0.5;
    auto* sample = app.add_subcommand("sample", "draw one sample stream");
    sample->fallthrough();
    sample->add_option("--method", method, "uni|rw|fs|wrw");
    sample->add_option("--budget", budget, "samples, integer or fraction like 0.001V");
    sample->add_option("--walkers", walkers, "FS walker count");
    sample->add_option("--cost-c", cost_c, "UNI cost per delivered sample");
    sample->add_option("--beta", beta, "WRW weight exponent");
    sample->add_option("--out", stream_out, "stream file name");

    std::string estimator = "simple";
    std::size_t runs = 1000, subsets = 100;
    double gamma = 1.0;
    auto* est_node = app.add_subcommand("estimate-node", "node label density trials");
    est_node->fallthrough();
    est_node->add_option("--method", method, "uni|rw|fs|wrw");
    est_node->add_option("--estimator", estimator,
                         "simple|neighbor|mixture|directed-neighbor|out-neighbor");
    est_node->add_option("--budget", budget, "samples per run");
    est_node->add_option("--runs", runs, "independent runs");
    est_node->add_option("--walkers", walkers, "FS walker count");
    est_node->add_option("--cost-c", cost_c, "UNI cost per delivered sample");
    est_node->add_option("--beta", beta, "WRW weight exponent");
    est_node->add_option("--gamma", gamma, "out-neighbor estimator offset");
    est_node->add_option("--subsets", subsets, "mixture calibration subsets");

    std::string edge_estimator = "neighbor";
    auto* est_edge = app.add_subcommand("estimate-edge", "joint degree distribution trials");
    est_edge->fallthrough();
    est_edge->add_option("--method", method, "uni|rw|fs|wrw");
    est_edge->add_option("--estimator", edge_estimator,
                         "traversal|traversal-directed|neighbor|neighbor-directed");
    est_edge->add_option("--budget", budget, "samples per run");
    est_edge->add_option("--runs", runs, "independent runs");
    est_edge->add_option("--walkers", walkers, "FS walker count");

    std::string det_method = "mxs";
    std::size_t top_n = 100, det_seeds = 50;
    auto* detect = app.add_subcommand("detect", "top-N degree detection");
    detect->fallthrough();
    detect->add_option("--method", det_method, "mxs|xs|wrw|rw");
    detect->add_option("--budget", budget, "crawl budget");
    detect->add_option("--top", top_n, "N");
    detect->add_option("--seeds", det_seeds, "number of independent seeds");
    detect->add_option("--beta", beta, "WRW weight exponent");

    std::string strategy = "mxs";
    std::size_t budget_b = 20, pairs = 1000;
    auto* shortpath = app.add_subcommand("shortpath", "two-walker path discovery");
    shortpath->fallthrough();
    shortpath->add_option("--strategy", strategy, "rw|wrw|mxs");
    shortpath->add_option("--budget-b", budget_b, "budget per walker");
    shortpath->add_option("--pairs", pairs, "connected pairs to evaluate");
    shortpath->add_option("--beta", beta, "WRW weight exponent");

    std::string config_path;
    auto* eval = app.add_subcommand("eval", "run trials from a key=value config file");
    eval->fallthrough();
    eval->add_option("--config", config_path, "config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (stats->parsed()) return cmd_stats(g);
        if (generate->parsed())
            return cmd_generate(g, kind, gen_n, gen_param, out_path, reciprocal);
        if (sample->parsed())
            return cmd_sample(g, method, budget, walkers, cost_c, beta, stream_out);
        if (est_node->parsed())
            return cmd_estimate_node(g, method, estimator, budget, runs, walkers, cost_c,
                                     beta, gamma, subsets);
        if (est_edge->parsed())
            return cmd_estimate_edge(g, method, edge_estimator, budget, runs, walkers);
        if (detect->parsed())
            return cmd_detect(g, det_method, budget, top_n, det_seeds, beta);
        if (shortpath->parsed())
            return cmd_shortpath(g, strategy, budget_b, pairs, beta);
        if (eval->parsed()) return cmd_eval(g, config_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const CapabilityError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
