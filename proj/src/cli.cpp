#include "ubb/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "ubb/connectivity.hpp"
#include "ubb/construct.hpp"
#include "ubb/error.hpp"
#include "ubb/graph_io.hpp"
#include "ubb/netsim.hpp"
#include "ubb/search.hpp"
#include "ubb/verify.hpp"

namespace ubb::cli {

namespace {

void emit(const std::string& body, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << body;
        return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write " + path);
    f << body;
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Uncovering load_ubb(const std::string& ubb_path, const std::string& graph_path) {
    Uncovering u = Uncovering::from_json(read_json_file(ubb_path));
    if (graph_path.empty()) return u;
    const Graph g = load_graph_file(graph_path);
    if (!g.same_edge_set(u.graph())) throw ParseError(graph_path + " does not match the graph stored in " + ubb_path);
    return u.remap_to(g);
}

// Circulant with every step generating a Hamilton cycle: the step classes
// form a Hamiltonian decomposition.
Uncovering circulant_ubb(int n, const std::vector<int>& steps) {
    const Graph g = build_circulant(n, steps);
    std::vector<EdgeSubset> cycles;
    for (int s : steps) {
        if (std::gcd(s, n) != 1 || 2 * s == n)
            throw InvalidArgument("step " + std::to_string(s) + " does not generate a Hamilton cycle of C_" +
                                  std::to_string(n));
        EdgeSubset c = g.no_edges();
        for (int i = 0; i < n; ++i) c.insert(g.edge_id(i, (i + s) % n));
        cycles.push_back(std::move(c));
    }
    return ubb_hamdec(g, HamiltonianDecomposition(g, std::move(cycles)));
}

struct Options {
    int threads = 0;
    // construct
    std::string family;
    int n = 0, m = 0;
    std::vector<int> steps;
    std::string out, graph_out;
    // verify / simulate / search / mincut
    std::string ubb, graph, mode = "exhaustive";
    std::uint64_t samples = 0, seed = 0, ceiling = 100'000'000;
    bool minimal = false;
    // bound
    int k = 0, t = -1;
    // search / scan
    std::uint64_t exact_budget = 0;
    std::size_t tree_cap = 100'000;
    std::string input, dump_dir;
    // simulate
    int root = 0;
    std::size_t trials = 1000;
    std::string failures = "0", model = "uniform", csv;
};

int cmd_construct(const Options& o, std::ostream& out) {
    Uncovering u = [&] {
        if (o.family == "complete") return ubb_complete(o.n);
        if (o.family == "bipartite") return ubb_complete_bipartite(o.m, o.n);
        if (o.family == "wheel") return ubb_wheel(o.n);
        return circulant_ubb(o.n, o.steps);
    }();
    emit(u.to_json().dump(2) + "\n", o.out, out);
    if (!o.graph_out.empty()) emit(to_graph6(u.graph()) + "\n", o.graph_out, out);
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const Uncovering u = load_ubb(o.ubb, o.graph);
    VerifyOptions vo;
    vo.threads = o.threads;
    vo.seed = o.seed;
    vo.ceiling = o.ceiling;
    if (o.mode == "sampled" || o.samples > 0) {
        vo.mode = VerifyOptions::Mode::sampled;
        if (o.samples > 0) vo.samples = o.samples;
    }
    const Verdict v = verify_ubb(u, vo);
    nlohmann::json body = v.to_json();
    body["t"] = u.t();
    body["trees"] = u.size();
    if (o.minimal && v.status == VerdictStatus::valid) body["minimality"] = is_minimal_ubb(u, vo).to_json();
    emit(body.dump(2) + "\n", o.out, out);
    return v.ok() ? kOk : kInvalid;
}

int cmd_mincut(const Options& o, std::ostream& out) {
    const Graph g = load_graph_file(o.graph);
    nlohmann::json body{{"lambda", edge_connectivity(g)}};
    if (is_connected(g) && g.vertex_count() >= 2) {
        const EdgeSubset cut = min_edge_cut(g);
        nlohmann::json edges = nlohmann::json::array();
        cut.for_each([&](EdgeId e) { edges.push_back({g.edge(e).u, g.edge(e).v}); });
        body["cut"] = cut.ids();
        body["cut_edges"] = edges;
    } else {
        body["cut"] = nlohmann::json::array();
        body["cut_edges"] = nlohmann::json::array();
    }
    emit(body.dump(2) + "\n", o.out, out);
    return kOk;
}

int cmd_search(const Options& o, std::ostream& out) {
    const Graph g = load_graph_file(o.graph);
    const int lambda = edge_connectivity(g);
    const int t = o.t >= 0 ? o.t : lambda - 1;
    SearchLimits limits;
    limits.tree_cap = o.tree_cap;
    const Uncovering greedy = greedy_min_ubb(g, t, limits);
    nlohmann::json body{{"n", g.vertex_count()}, {"edges", g.edge_count()}, {"lambda", lambda}, {"t", t},
                        {"greedy_size", greedy.size()}};
    if (t >= 1 && t <= static_cast<int>(g.edge_count()) - (g.vertex_count() - 1))
        body["schonheim"] = schonheim_bound(static_cast<int>(g.edge_count()), g.vertex_count() - 1, t);
    Uncovering best = greedy;
    if (o.exact_budget > 0) {
        ExactResult exact = exact_min_ubb(g, t, o.exact_budget, limits);
        body["exact_size"] = exact.size;
        body["exact_optimal"] = exact.optimal;
        body["nodes"] = exact.nodes;
        best = std::move(exact.ubb);
    }
    if (!o.out.empty()) emit(best.to_json().dump(2) + "\n", o.out, out);
    out << body.dump(2) << "\n";
    return kOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
    std::ifstream in(o.input);
    if (!in) throw ParseError("cannot open " + o.input);
    const auto graphs = read_graph6_stream(in);
    std::vector<ScanInput> inputs;
    for (const auto& g : graphs) inputs.push_back({to_graph6(g), g, std::nullopt});
    ScanOptions so;
    so.exact_budget = o.exact_budget;
    so.limits.tree_cap = o.tree_cap;
    so.threads = o.threads;
    const auto rows = conjecture_scan(inputs, so);

    std::ostringstream csv;
    csv << scan_csv_header() << "\n";
    bool flagged = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        csv << scan_csv_row(rows[i]) << "\n";
        if (rows[i].status == ScanStatus::inconclusive || rows[i].status == ScanStatus::counterexample_candidate)
            flagged = true;
        if (!o.dump_dir.empty() && rows[i].best) {
            std::filesystem::create_directories(o.dump_dir);
            emit(rows[i].best->to_json().dump(2) + "\n",
                 (std::filesystem::path(o.dump_dir) / ("graph" + std::to_string(i) + ".json")).string(), out);
        }
    }
    emit(csv.str(), o.out, out);
    return flagged ? kInvalid : kOk;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dash = text.find('-');
    try {
        if (dash == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dash)), std::stoi(text.substr(dash + 1))};
    } catch (const std::exception&) {
        throw InvalidArgument("failure size must be k or a-b, got '" + text + "'");
    }
}

int cmd_simulate(const Options& o, std::ostream& out) {
    const Uncovering u = load_ubb(o.ubb, o.graph);
    SimConfig cfg;
    cfg.root = o.root;
    cfg.trials = o.trials;
    std::tie(cfg.failures_min, cfg.failures_max) = parse_range(o.failures);
    cfg.seed = o.seed;
    cfg.model = o.model == "adversarial" ? FailureModel::min_cut_adversarial : FailureModel::uniform_random;
    cfg.threads = o.threads;
    const SimStats stats = simulate(u, cfg);
    emit(stats.to_json().dump(2) + "\n", o.out, out);
    if (!o.csv.empty()) emit(stats.to_csv(), o.csv, out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Uncoverings-by-bases: construct, verify, search and simulate"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads, "Worker thread cap (0 = OpenMP default)");

    auto* construct = app.add_subcommand("construct", "Build a UBB for a named graph family");
    construct->add_option("--family", o.family)->required()->check(CLI::IsMember({"complete", "bipartite", "wheel", "circulant"}));
    construct->add_option("-n", o.n, "Family size parameter")->required();
    construct->add_option("-m", o.m, "Smaller part of K_{m,n}");
    construct->add_option("--steps", o.steps, "Circulant steps")->delimiter(',');
    construct->add_option("--out", o.out, "UBB JSON output (default stdout)");
    construct->add_option("--graph-out", o.graph_out, "Also write the graph as graph6");

    auto* verify = app.add_subcommand("verify", "Check a UBB file");
    verify->add_option("--ubb", o.ubb)->required();
    verify->add_option("--graph", o.graph, "graph6 or JSON graph the UBB must match");
    verify->add_option("--mode", o.mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
    verify->add_option("--samples", o.samples, "Sampled mode with this many t-subsets");
    verify->add_option("--seed", o.seed);
    verify->add_option("--ceiling", o.ceiling, "Largest exhaustive subset count");
    verify->add_flag("--minimal", o.minimal, "Also certify minimality");
    verify->add_option("--out", o.out);

    auto* mincut = app.add_subcommand("mincut", "Edge connectivity and a minimum cut");
    mincut->add_option("--graph", o.graph)->required();
    mincut->add_option("--out", o.out);

    auto* bound = app.add_subcommand("bound", "Schönheim bound for an (n,k,t)-uncovering");
    bound->add_option("-n", o.n)->required();
    bound->add_option("-k", o.k)->required();
    bound->add_option("-t", o.t)->required();

    auto* search = app.add_subcommand("search", "Greedy / exact minimum UBB for one graph");
    search->add_option("--graph", o.graph)->required();
    search->add_option("--t", o.t, "Failures to survive (default lambda-1)");
    search->add_option("--exact-budget", o.exact_budget, "Branch-and-bound node budget (0 = greedy only)");
    search->add_option("--tree-cap", o.tree_cap);
    search->add_option("--out", o.out, "Write the best UBB as JSON");

    auto* scan = app.add_subcommand("scan", "Conjecture scan over a graph6 catalog");
    scan->add_option("--input", o.input)->required();
    scan->add_option("--exact-budget", o.exact_budget);
    scan->add_option("--tree-cap", o.tree_cap);
    scan->add_option("--out", o.out, "CSV output (default stdout)");
    scan->add_option("--dump-dir", o.dump_dir, "Write each row's UBB as JSON here");

    auto* sim = app.add_subcommand("simulate", "Failure-injection broadcast simulation");
    sim->add_option("--ubb", o.ubb)->required();
    sim->add_option("--graph", o.graph);
    sim->add_option("--root", o.root);
    sim->add_option("--trials", o.trials);
    sim->add_option("--failures", o.failures, "k or a-b edge failures per trial");
    sim->add_option("--seed", o.seed);
    sim->add_option("--model", o.model)->check(CLI::IsMember({"uniform", "adversarial"}));
    sim->add_option("--out", o.out);
    sim->add_option("--csv", o.csv, "Per-trial CSV output");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    if (o.threads > 0) omp_set_num_threads(o.threads);

    try {
        if (*construct) return cmd_construct(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*mincut) return cmd_mincut(o, out);
        if (*bound) {
            out << schonheim_bound(o.n, o.k, o.t) << "\n";
            return kOk;
        }
        if (*search) return cmd_search(o, out);
        if (*scan) return cmd_scan(o, out);
        if (*sim) return cmd_simulate(o, out);
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace ubb::cli
