#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ubb/uncovering.hpp"

namespace ubb {

enum class FailureModel { uniform_random, min_cut_adversarial };

std::string to_string(FailureModel m);

struct SimConfig {
    VertexId root = 0;
    std::size_t trials = 1000;
    /// Failures per trial, drawn uniformly from [failures_min, failures_max].
    int failures_min = 0;
    int failures_max = 0;
    std::uint64_t seed = 0;
    FailureModel model = FailureModel::uniform_random;
    int threads = 0;
};

struct TrialRecord {
    std::vector<EdgeId> failures;
    /// Lowest-index tree disjoint from the failures.
    std::optional<std::size_t> tree;
    /// Eccentricity of the root in the chosen tree; -1 without a tree.
    int depth = -1;
    std::size_t messages = 0;
    bool residual_connected = false;
};

struct SimStats {
    std::vector<TrialRecord> trials;
    std::size_t successes = 0;
    double success_rate = 0.0;
    /// Times each tree index was chosen.
    std::vector<std::size_t> tree_usage;

    nlohmann::json to_json() const;
    std::string to_csv() const;
};

/// Failure-injection broadcast: per trial draw a failure set, pick the lowest
/// intact tree and broadcast from the root along it. Trial i uses its own
/// generator seeded with derive_seed(seed, i), so the result does not depend
/// on the thread count.
///
/// The adversarial model picks a uniformly random minimum edge cut, then
/// trims it (fewer failures than λ) or pads it with random extra edges.
SimStats simulate(const Uncovering& u, const SimConfig& cfg);

/// All minimum edge cuts, found by scanning λ-subsets when C(|E|, λ) is at
/// most `ceiling`; otherwise just the one from min_edge_cut.
std::vector<EdgeSubset> enumerate_min_cuts(const Graph& g, std::uint64_t ceiling = 2'000'000);

/// Colex-least `size`-set of edges meeting every tree, if any.
std::optional<EdgeSubset> worst_case_failures(const Uncovering& u, int size);

}  // namespace ubb
