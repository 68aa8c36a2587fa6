#include "ubb/verify.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ubb/combinatorics.hpp"
#include "ubb/connectivity.hpp"
#include "ubb/error.hpp"
#include "ubb/uncover_kernel.hpp"

namespace ubb {

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::valid: return "valid";
        case VerdictStatus::invalid: return "invalid";
        case VerdictStatus::sampled_pass: return "sampled-pass";
        case VerdictStatus::precondition_violation: return "precondition-violation";
    }
    return "unknown";
}

nlohmann::json Verdict::to_json() const {
    nlohmann::json j{{"status", to_string(status)}, {"subsets_checked", subsets_checked}, {"lambda", lambda}};
    j["witness"] = witness ? nlohmann::json(witness->ids()) : nlohmann::json(nullptr);
    return j;
}

namespace {

std::vector<EdgeSubset> tree_sets(const Uncovering& u) {
    std::vector<EdgeSubset> out;
    out.reserve(u.size());
    for (const auto& tree : u.trees()) out.push_back(tree.edges());
    return out;
}

Verdict run_kernel(const Uncovering& u, const VerifyOptions& opts) {
    const auto trees = tree_sets(u);
    const std::size_t m = u.graph().edge_count();
    Verdict v;
    UncoveredSearch found;
    if (opts.mode == VerifyOptions::Mode::sampled) {
        found = find_uncovered_sampled(trees, m, u.t(), opts.samples, opts.seed, opts.threads);
        v.status = found.witness ? VerdictStatus::invalid : VerdictStatus::sampled_pass;
    } else {
        const std::uint64_t total = binomial(m, static_cast<std::uint64_t>(u.t()));
        if (total > opts.ceiling)
            throw ResourceLimit("exhaustive verification needs " + std::to_string(total) +
                                " subsets, above the ceiling of " + std::to_string(opts.ceiling));
        found = opts.serial ? find_uncovered_serial(trees, m, u.t())
                            : find_uncovered_parallel(trees, m, u.t(), opts.threads);
        v.status = found.witness ? VerdictStatus::invalid : VerdictStatus::valid;
    }
    v.subsets_checked = found.checked;
    if (found.witness) v.witness = EdgeSubset(m, *found.witness);
    return v;
}

}  // namespace

Verdict verify_ubb(const Uncovering& u, const VerifyOptions& opts) {
    const int lambda = edge_connectivity(u.graph());
    if (u.t() >= lambda) {
        Verdict v;
        v.status = VerdictStatus::precondition_violation;
        v.lambda = lambda;
        return v;
    }
    Verdict v = run_kernel(u, opts);
    v.lambda = lambda;
    return v;
}

nlohmann::json MinimalityReport::to_json() const {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : witnesses) w.push_back(x ? nlohmann::json(x->ids()) : nlohmann::json(nullptr));
    return {{"minimal", minimal}, {"witnesses", w}};
}

MinimalityReport is_minimal_ubb(const Uncovering& u, const VerifyOptions& opts) {
    VerifyOptions exhaustive = opts;
    exhaustive.mode = VerifyOptions::Mode::exhaustive;
    if (const Verdict whole = verify_ubb(u, exhaustive); whole.status != VerdictStatus::valid)
        throw InvalidArgument("minimality needs an uncovering that verifies, got " + to_string(whole.status));
    MinimalityReport report;
    report.minimal = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const Verdict v = run_kernel(u.without(i), exhaustive);
        report.witnesses.push_back(v.witness);
        if (!v.witness) report.minimal = false;
    }
    return report;
}

std::uint64_t schonheim_bound(int n, int k, int t) {
    if (!(n > k && k >= 1 && t >= 1 && t <= n - k))
        throw InvalidArgument("Schönheim bound needs n > k >= 1 and 1 <= t <= n - k");
    unsigned __int128 value = 1;
    for (int i = t - 1; i >= 0; --i) {
        const auto num = static_cast<unsigned __int128>(n - i) * value;
        const auto den = static_cast<unsigned __int128>(n - k - i);
        value = (num + den - 1) / den;
        if (value > std::numeric_limits<std::uint64_t>::max()) throw ResourceLimit("Schönheim bound overflows 64 bits");
    }
    return static_cast<std::uint64_t>(value);
}

std::vector<EdgeSubset> export_covering_design(const Uncovering& u) {
    std::vector<EdgeSubset> blocks;
    blocks.reserve(u.size());
    for (const auto& tree : u.trees()) blocks.push_back(tree.edges().complement());
    return blocks;
}

bool verify_covering(int n, const std::vector<std::vector<int>>& blocks, int t) {
    if (n < 0 || t < 0) throw InvalidArgument("covering needs non-negative n and t");
    if (t > n) return true;
    std::vector<std::vector<bool>> member(blocks.size(), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (int p : blocks[b]) {
            if (p < 0 || p >= n) throw InvalidArgument("block point outside 0..n-1");
            member[b][static_cast<std::size_t>(p)] = true;
        }
    }
    std::vector<int> comb(static_cast<std::size_t>(t));
    std::iota(comb.begin(), comb.end(), 0);
    do {
        const bool inside = std::any_of(member.begin(), member.end(), [&](const std::vector<bool>& blk) {
            return std::all_of(comb.begin(), comb.end(), [&](int p) { return blk[static_cast<std::size_t>(p)]; });
        });
        if (!inside) return false;
    } while (next_colex(comb, n));
    return true;
}

bool verify_covering(int n, const std::vector<EdgeSubset>& blocks, int t) {
    std::vector<std::vector<int>> lists;
    lists.reserve(blocks.size());
    for (const auto& b : blocks) {
        if (b.universe() != static_cast<std::size_t>(n)) throw InvalidArgument("block universe differs from n");
        lists.push_back(b.ids());
    }
    return verify_covering(n, lists, t);
}

}  // namespace ubb
