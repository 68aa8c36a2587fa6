#include "ubb/netsim.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

#include <omp.h>

#include "ubb/combinatorics.hpp"
#include "ubb/connectivity.hpp"
#include "ubb/error.hpp"
#include "ubb/uncover_kernel.hpp"

namespace ubb {

std::string to_string(FailureModel m) {
    return m == FailureModel::uniform_random ? "uniform-random" : "min-cut-adversarial";
}

std::vector<EdgeSubset> enumerate_min_cuts(const Graph& g, std::uint64_t ceiling) {
    const int lambda = edge_connectivity(g);
    if (lambda == 0) return {};
    const int m = static_cast<int>(g.edge_count());
    if (binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(lambda)) > ceiling) return {min_edge_cut(g)};
    std::vector<EdgeSubset> cuts;
    std::vector<int> comb(static_cast<std::size_t>(lambda));
    std::iota(comb.begin(), comb.end(), 0);
    do {
        EdgeSubset s(g.edge_count(), std::vector<EdgeId>(comb.begin(), comb.end()));
        if (!is_connected(g, s)) cuts.push_back(std::move(s));
    } while (next_colex(comb, m));
    return cuts;
}

namespace {

int tree_depth(const Graph& g, const EdgeSubset& tree, VertexId root) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<VertexId> queue{root};
    dist[static_cast<std::size_t>(root)] = 0;
    int depth = 0;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (const auto& inc : g.incident(v)) {
            if (!tree.contains(inc.edge) || dist[static_cast<std::size_t>(inc.neighbour)] >= 0) continue;
            dist[static_cast<std::size_t>(inc.neighbour)] = dist[static_cast<std::size_t>(v)] + 1;
            depth = std::max(depth, dist[static_cast<std::size_t>(inc.neighbour)]);
            queue.push_back(inc.neighbour);
        }
    }
    return depth;
}

std::vector<EdgeId> draw_failures(std::mt19937_64& rng, const Graph& g, int size, FailureModel model,
                                  const std::vector<EdgeSubset>& cuts) {
    const int m = static_cast<int>(g.edge_count());
    if (model == FailureModel::uniform_random || cuts.empty()) {
        const auto picked = sample_subset(rng, m, size);
        return {picked.begin(), picked.end()};
    }
    const auto cut = cuts[uniform_below(rng, cuts.size())].ids();
    const int c = static_cast<int>(cut.size());
    std::vector<EdgeId> out;
    if (size <= c) {
        for (int pos : sample_subset(rng, c, size)) out.push_back(cut[static_cast<std::size_t>(pos)]);
    } else {
        out = cut;
        const auto rest = (EdgeSubset(g.edge_count(), cut)).complement().ids();
        for (int pos : sample_subset(rng, static_cast<int>(rest.size()), size - c))
            out.push_back(rest[static_cast<std::size_t>(pos)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SimStats simulate(const Uncovering& u, const SimConfig& cfg) {
    const Graph& g = u.graph();
    if (cfg.root < 0 || cfg.root >= g.vertex_count()) throw InvalidArgument("root vertex out of range");
    if (cfg.failures_min < 0 || cfg.failures_max < cfg.failures_min ||
        cfg.failures_max > static_cast<int>(g.edge_count()))
        throw InvalidArgument("failure size range is invalid for this graph");

    std::vector<EdgeSubset> cuts;
    if (cfg.model == FailureModel::min_cut_adversarial) cuts = enumerate_min_cuts(g);

    SimStats stats;
    stats.trials.resize(cfg.trials);
    const auto n = static_cast<long long>(cfg.trials);
    const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
    for (long long i = 0; i < n; ++i) {
        std::mt19937_64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(i)));
        const int span = cfg.failures_max - cfg.failures_min + 1;
        const int size = cfg.failures_min + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(span)));
        TrialRecord rec;
        rec.failures = draw_failures(rng, g, size, cfg.model, cuts);
        const EdgeSubset failed(g.edge_count(), rec.failures);
        rec.residual_connected = is_connected(g, failed);
        for (std::size_t k = 0; k < u.size(); ++k) {
            if (u.trees()[k].edges().disjoint(failed)) {
                rec.tree = k;
                rec.depth = tree_depth(g, u.trees()[k].edges(), cfg.root);
                rec.messages = static_cast<std::size_t>(g.vertex_count() - 1);
                break;
            }
        }
        stats.trials[static_cast<std::size_t>(i)] = std::move(rec);
    }

    stats.tree_usage.assign(u.size(), 0);
    for (const auto& rec : stats.trials) {
        if (rec.tree) {
            ++stats.successes;
            ++stats.tree_usage[*rec.tree];
        }
    }
    stats.success_rate = cfg.trials == 0 ? 1.0 : static_cast<double>(stats.successes) / static_cast<double>(cfg.trials);
    return stats;
}

nlohmann::json SimStats::to_json() const {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : trials) {
        records.push_back({{"failures", r.failures},
                           {"tree", r.tree ? nlohmann::json(*r.tree) : nlohmann::json(nullptr)},
                           {"depth", r.depth},
                           {"messages", r.messages},
                           {"residual_connected", r.residual_connected}});
    }
    return {{"trials", trials.size()},
            {"successes", successes},
            {"success_rate", success_rate},
            {"tree_usage", tree_usage},
            {"records", records}};
}

std::string SimStats::to_csv() const {
    std::ostringstream out;
    out << "trial,failures,tree,depth,messages,residual_connected\n";
    for (std::size_t i = 0; i < trials.size(); ++i) {
        const auto& r = trials[i];
        out << i << ',';
        for (std::size_t k = 0; k < r.failures.size(); ++k) out << (k ? " " : "") << r.failures[k];
        out << ',' << (r.tree ? std::to_string(*r.tree) : std::string{}) << ',' << r.depth << ',' << r.messages << ','
            << (r.residual_connected ? "true" : "false") << '\n';
    }
    return out.str();
}

std::optional<EdgeSubset> worst_case_failures(const Uncovering& u, int size) {
    if (size < 1) throw InvalidArgument("failure size must be at least 1");
    std::vector<EdgeSubset> trees;
    for (const auto& tree : u.trees()) trees.push_back(tree.edges());
    const auto found = find_uncovered_parallel(trees, u.graph().edge_count(), size);
    if (!found.witness) return std::nullopt;
    return EdgeSubset(u.graph().edge_count(), *found.witness);
}

}  // namespace ubb
