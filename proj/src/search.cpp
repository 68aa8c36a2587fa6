#include "ubb/search.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include <omp.h>

#include "ubb/combinatorics.hpp"
#include "ubb/connectivity.hpp"
#include "ubb/error.hpp"
#include "ubb/spanning_tree.hpp"
#include "ubb/verify.hpp"

namespace ubb {

namespace {

using Word = std::uint64_t;

struct Bits {
    std::vector<Word> w;

    explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(std::uint64_t i) { w[i / 64] |= Word{1} << (i % 64); }
    bool test(std::uint64_t i) const { return (w[i / 64] >> (i % 64)) & 1U; }
    std::size_t count() const {
        std::size_t c = 0;
        for (Word x : w) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    std::size_t count_and(const Bits& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < w.size(); ++i) c += static_cast<std::size_t>(std::popcount(w[i] & o.w[i]));
        return c;
    }
    void remove(const Bits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
    }
    bool none() const {
        return std::all_of(w.begin(), w.end(), [](Word x) { return x == 0; });
    }
    std::uint64_t first() const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != 0) return i * 64 + static_cast<std::uint64_t>(std::countr_zero(w[i]));
        return UINT64_MAX;
    }
};

// Set-cover form of the minimum UBB problem: elements are the t-subsets of
// E(g) by colex rank, tree i covers the t-subsets of its complement.
struct CoverInstance {
    const Graph* g;
    int t;
    std::uint64_t universe;
    std::vector<SpanningTree> trees;
    std::vector<Bits> covers;
    std::uint64_t lower_bound;
};

CoverInstance build_instance(const Graph& g, int t, const SearchLimits& limits) {
    if (t < 0) throw InvalidArgument("t must be non-negative");
    const int lambda = edge_connectivity(g);
    if (t >= lambda)
        throw InvalidArgument("t = " + std::to_string(t) + " is not below the edge connectivity " +
                              std::to_string(lambda));
    const std::size_t m = g.edge_count();
    const std::uint64_t universe = binomial(m, static_cast<std::uint64_t>(t));
    if (universe > limits.subset_cap)
        throw ResourceLimit(std::to_string(universe) + " t-subsets exceed the cap of " +
                            std::to_string(limits.subset_cap));
    CoverInstance inst{&g, t, universe, enumerate_spanning_trees(g, limits.tree_cap), {}, 1};
    const unsigned __int128 bits = static_cast<unsigned __int128>(inst.trees.size()) * universe;
    if (bits > limits.incidence_bit_cap) throw ResourceLimit("tree/subset incidence table exceeds its cap");

    inst.covers.reserve(inst.trees.size());
    for (const auto& tree : inst.trees) {
        Bits cover(universe);
        const auto rest = tree.edges().complement().ids();
        const int c = static_cast<int>(rest.size());
        if (t <= c) {
            std::vector<int> pos(static_cast<std::size_t>(t));
            std::vector<int> ids(static_cast<std::size_t>(t));
            for (int i = 0; i < t; ++i) pos[static_cast<std::size_t>(i)] = i;
            do {
                for (int i = 0; i < t; ++i) ids[static_cast<std::size_t>(i)] = rest[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])];
                cover.set(colex_rank(ids));
            } while (next_colex(pos, c));
        }
        inst.covers.push_back(std::move(cover));
    }
    const int k = g.vertex_count() - 1;
    if (t >= 1 && k >= 1 && t <= static_cast<int>(m) - k) inst.lower_bound = schonheim_bound(static_cast<int>(m), k, t);
    return inst;
}

constexpr int kGreedyRounds = 16;
constexpr std::uint64_t kGreedySeed = 0x9b1d5a3c2e47f081ULL;

// One greedy pass. Round 0 breaks gain ties by lowest index, later rounds
// uniformly at random from a generator fixed by the round number.
std::vector<std::size_t> greedy_pass(const CoverInstance& inst, int round) {
    std::mt19937_64 rng(derive_seed(kGreedySeed, static_cast<std::uint64_t>(round)));
    Bits uncovered(inst.universe);
    for (std::uint64_t i = 0; i < inst.universe; ++i) uncovered.set(i);
    std::vector<std::size_t> picked;
    while (!uncovered.none()) {
        std::size_t best = inst.trees.size(), best_gain = 0;
        std::uint64_t ties = 0;
        for (std::size_t i = 0; i < inst.trees.size(); ++i) {
            const std::size_t gain = inst.covers[i].count_and(uncovered);
            if (gain == 0 || gain < best_gain) continue;
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
                ties = 1;
            } else if (round > 0 && uniform_below(rng, ++ties) == 0) {
                best = i;
            }
        }
        if (best == inst.trees.size()) throw Error("greedy cover stalled: some t-subset meets every spanning tree");
        picked.push_back(best);
        uncovered.remove(inst.covers[best]);
    }

    // Reverse delete: drop later picks whose subsets are all covered twice.
    std::vector<std::uint32_t> times(inst.universe, 0);
    for (std::size_t i : picked)
        for (std::uint64_t x = 0; x < inst.universe; ++x)
            if (inst.covers[i].test(x)) ++times[x];
    for (std::size_t pos = picked.size(); pos-- > 0;) {
        const Bits& c = inst.covers[picked[pos]];
        bool redundant = true;
        for (std::uint64_t x = 0; x < inst.universe && redundant; ++x)
            if (c.test(x) && times[x] < 2) redundant = false;
        if (!redundant) continue;
        for (std::uint64_t x = 0; x < inst.universe; ++x)
            if (c.test(x)) --times[x];
        picked.erase(picked.begin() + static_cast<std::ptrdiff_t>(pos));
    }
    return picked;
}

std::vector<std::size_t> greedy_cover(const CoverInstance& inst) {
    std::vector<std::size_t> best = greedy_pass(inst, 0);
    for (int round = 1; round < kGreedyRounds && best.size() > inst.lower_bound; ++round) {
        auto next = greedy_pass(inst, round);
        if (next.size() < best.size()) best = std::move(next);
    }
    return best;
}

Uncovering make_ubb(const CoverInstance& inst, const std::vector<std::size_t>& picked, const std::string& tag) {
    std::vector<SpanningTree> trees;
    trees.reserve(picked.size());
    for (std::size_t i : picked) trees.push_back(inst.trees[i]);
    return Uncovering(*inst.g, inst.t, std::move(trees), tag);
}

class BranchAndBound {
public:
    BranchAndBound(const CoverInstance& inst, std::vector<std::size_t> incumbent, std::uint64_t budget)
        : inst_(inst), best_(std::move(incumbent)), budget_(budget), excluded_(inst.trees.size(), false) {}

    void run() {
        if (best_.size() <= inst_.lower_bound) return;
        Bits uncovered(inst_.universe);
        for (std::uint64_t i = 0; i < inst_.universe; ++i) uncovered.set(i);
        std::vector<std::size_t> chosen;
        recurse(uncovered, chosen);
    }

    const std::vector<std::size_t>& best() const { return best_; }
    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool done() const { return exhausted_ || best_.size() <= inst_.lower_bound; }

    void recurse(const Bits& uncovered, std::vector<std::size_t>& chosen) {
        if (done()) return;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        if (uncovered.none()) {
            if (chosen.size() < best_.size()) best_ = chosen;
            return;
        }
        if (chosen.size() + 1 >= best_.size()) return;

        const std::size_t remaining = uncovered.count();
        std::size_t max_gain = 0;
        for (std::size_t i = 0; i < inst_.trees.size(); ++i)
            if (!excluded_[i]) max_gain = std::max(max_gain, inst_.covers[i].count_and(uncovered));
        if (max_gain == 0) return;
        if (chosen.size() + (remaining + max_gain - 1) / max_gain >= best_.size()) return;

        // Branch on the uncovered subset with the fewest available trees.
        std::uint64_t pivot = UINT64_MAX;
        std::size_t pivot_options = SIZE_MAX;
        for (std::size_t wi = 0; wi < uncovered.w.size() && pivot_options > 1; ++wi) {
            for (Word bits = uncovered.w[wi]; bits != 0; bits &= bits - 1) {
                const std::uint64_t s = wi * 64 + static_cast<std::uint64_t>(std::countr_zero(bits));
                std::size_t options = 0;
                for (std::size_t i = 0; i < inst_.trees.size() && options < pivot_options; ++i)
                    if (!excluded_[i] && inst_.covers[i].test(s)) ++options;
                if (options < pivot_options) {
                    pivot_options = options;
                    pivot = s;
                    if (options <= 1) break;
                }
            }
        }
        if (pivot_options == 0) return;

        std::vector<std::pair<std::size_t, std::size_t>> options;  // (-gain order, index)
        for (std::size_t i = 0; i < inst_.trees.size(); ++i)
            if (!excluded_[i] && inst_.covers[i].test(pivot)) options.emplace_back(inst_.covers[i].count_and(uncovered), i);
        std::stable_sort(options.begin(), options.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });

        std::vector<std::size_t> newly_excluded;
        for (const auto& [gain, tree] : options) {
            if (done()) break;
            Bits next = uncovered;
            next.remove(inst_.covers[tree]);
            chosen.push_back(tree);
            recurse(next, chosen);
            chosen.pop_back();
            excluded_[tree] = true;
            newly_excluded.push_back(tree);
        }
        for (std::size_t tree : newly_excluded) excluded_[tree] = false;
    }

    const CoverInstance& inst_;
    std::vector<std::size_t> best_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<bool> excluded_;
};

}  // namespace

Uncovering greedy_min_ubb(const Graph& g, int t, const SearchLimits& limits) {
    const CoverInstance inst = build_instance(g, t, limits);
    return make_ubb(inst, greedy_cover(inst), "greedy");
}

ExactResult exact_min_ubb(const Graph& g, int t, std::uint64_t node_budget, const SearchLimits& limits) {
    const CoverInstance inst = build_instance(g, t, limits);
    BranchAndBound bb(inst, greedy_cover(inst), node_budget);
    bb.run();
    auto picked = bb.best();
    std::sort(picked.begin(), picked.end());
    return ExactResult{picked.size(), make_ubb(inst, picked, "exact"), !bb.exhausted(), bb.nodes()};
}

std::string to_string(ScanStatus s) {
    switch (s) {
        case ScanStatus::ok: return "ok";
        case ScanStatus::skipped_disconnected: return "skipped-disconnected";
        case ScanStatus::skipped_low_connectivity: return "skipped-lambda-below-2";
        case ScanStatus::construction_only: return "construction-sizes-only";
        case ScanStatus::inconclusive: return "inconclusive";
        case ScanStatus::counterexample_candidate: return "counterexample-candidate";
    }
    return "unknown";
}

namespace {

// Exhaustive when within the default ceiling, sampled otherwise.
bool passes_verification(const Uncovering& u) {
    VerifyOptions opts;
    opts.threads = 1;
    try {
        return verify_ubb(u, opts).ok();
    } catch (const ResourceLimit&) {
        opts.mode = VerifyOptions::Mode::sampled;
        return verify_ubb(u, opts).ok();
    }
}

void append_note(ScanRow& row, const std::string& note) {
    if (!row.note.empty()) row.note += "; ";
    row.note += note;
}

ScanRow scan_one(const ScanInput& in, const ScanOptions& opts) {
    ScanRow row;
    row.id = in.id;
    row.n = in.graph.vertex_count();
    row.edges = in.graph.edge_count();
    if (row.n < 2) {
        row.status = ScanStatus::skipped_low_connectivity;
        return row;
    }
    if (!is_connected(in.graph)) {
        row.status = ScanStatus::skipped_disconnected;
        return row;
    }
    row.lambda = edge_connectivity(in.graph);
    if (row.lambda < 2) {
        row.status = ScanStatus::skipped_low_connectivity;
        return row;
    }
    row.t = row.lambda - 1;

    auto consider = [&](const Uncovering& u) {
        if (!passes_verification(u)) {
            append_note(row, u.provenance() + " UBB failed verification");
            return;
        }
        row.verified = true;
        if (u.size() == row.edges) row.equals_edges = true;
        if (!row.best || u.size() < row.best->size()) row.best = u;
    };

    try {
        if (in.constructed) {
            const Uncovering u = in.constructed->graph() == in.graph ? *in.constructed : in.constructed->remap_to(in.graph);
            row.constructed_size = u.size();
            if (u.t() != row.t) append_note(row, "construction t differs from lambda-1");
            else consider(u);
        }
        try {
            const Uncovering greedy = greedy_min_ubb(in.graph, row.t, opts.limits);
            row.greedy_size = greedy.size();
            consider(greedy);
            if (opts.exact_budget > 0) {
                const ExactResult exact = exact_min_ubb(in.graph, row.t, opts.exact_budget, opts.limits);
                row.exact_size = exact.size;
                row.exact_optimal = exact.optimal;
                consider(exact.ubb);
            }
        } catch (const ResourceLimit& e) {
            append_note(row, e.what());
        }
    } catch (const Error& e) {
        append_note(row, e.what());
    }

    row.conjecture_holds = row.best && row.best->size() <= row.edges;
    if (row.conjecture_holds) {
        row.status = ScanStatus::ok;
    } else if (row.exact_size && row.exact_optimal && *row.exact_size > row.edges) {
        row.status = ScanStatus::counterexample_candidate;
    } else if (row.greedy_size) {
        row.status = ScanStatus::inconclusive;
    } else {
        row.status = ScanStatus::construction_only;
    }
    return row;
}

std::string opt_field(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string{}; }

}  // namespace

std::vector<ScanRow> conjecture_scan(const std::vector<ScanInput>& inputs, const ScanOptions& opts) {
    std::vector<ScanRow> rows(inputs.size());
    const long long count = static_cast<long long>(inputs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.threads > 0 ? opts.threads : omp_get_max_threads())
    for (long long i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = scan_one(inputs[static_cast<std::size_t>(i)], opts);
    return rows;
}

std::string scan_csv_header() {
    return "id,n,edges,lambda,t,constructed_size,greedy_size,exact_size,exact_optimal,verified,conjecture_holds,"
           "equals_edges,status,note";
}

std::string scan_csv_row(const ScanRow& row) {
    std::string note = row.note;
    std::string quoted = "\"";
    for (char c : note) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    std::ostringstream out;
    out << row.id << ',' << row.n << ',' << row.edges << ',' << row.lambda << ',' << row.t << ','
        << opt_field(row.constructed_size) << ',' << opt_field(row.greedy_size) << ',' << opt_field(row.exact_size) << ','
        << (row.exact_optimal ? "true" : "false") << ',' << (row.verified ? "true" : "false") << ','
        << (row.conjecture_holds ? "true" : "false") << ',' << (row.equals_edges ? "true" : "false") << ','
        << to_string(row.status) << ',' << quoted;
    return out.str();
}

}  // namespace ubb
