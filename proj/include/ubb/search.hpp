#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ubb/uncovering.hpp"

namespace ubb {

struct SearchLimits {
    std::size_t tree_cap = 100'000;
    std::uint64_t subset_cap = 10'000'000;
    /// Trees x subsets incidence bits held in memory.
    std::uint64_t incidence_bit_cap = 1ULL << 30;
};

/// Greedy set cover over the dual covering: repeatedly takes the spanning
/// tree avoiding the most still-unhandled t-subsets, then drops redundant
/// picks. Sixteen fixed-seed passes differing only in how gain ties are
/// broken (the first by lowest enumeration index); the smallest cover wins. Throws InvalidArgument when t >= λ(g), ResourceLimit past a cap.
Uncovering greedy_min_ubb(const Graph& g, int t, const SearchLimits& limits = {});

struct ExactResult {
    std::size_t size;
    Uncovering ubb;
    /// False when the node budget ran out; `ubb` is then the best incumbent.
    bool optimal;
    std::uint64_t nodes;
};

/// Branch and bound on the uncovered t-subset with fewest candidate trees,
/// seeded with the greedy cover and stopped early at the Schönheim bound.
ExactResult exact_min_ubb(const Graph& g, int t, std::uint64_t node_budget = 2'000'000,
                          const SearchLimits& limits = {});

enum class ScanStatus {
    ok,
    skipped_disconnected,
    skipped_low_connectivity,
    construction_only,
    inconclusive,
    counterexample_candidate,
};

std::string to_string(ScanStatus s);

struct ScanInput {
    std::string id;
    Graph graph;
    /// A UBB from a known construction, checked and reported alongside.
    std::optional<Uncovering> constructed;
};

struct ScanRow {
    std::string id;
    int n = 0;
    std::size_t edges = 0;
    int lambda = 0;
    int t = 0;
    std::optional<std::size_t> constructed_size;
    std::optional<std::size_t> greedy_size;
    std::optional<std::size_t> exact_size;
    bool exact_optimal = false;
    /// The smallest reported UBB passed verify_ubb.
    bool verified = false;
    bool conjecture_holds = false;
    /// Some UBB found has exactly |E| trees.
    bool equals_edges = false;
    ScanStatus status = ScanStatus::ok;
    std::string note;
    /// Smallest verified UBB, for dumps.
    std::optional<Uncovering> best;
};

struct ScanOptions {
    /// 0 skips the exact search.
    std::uint64_t exact_budget = 0;
    SearchLimits limits;
    int threads = 0;
};

/// One row per input, in input order. Graphs are processed in parallel.
std::vector<ScanRow> conjecture_scan(const std::vector<ScanInput>& inputs, const ScanOptions& opts = {});

std::string scan_csv_header();
std::string scan_csv_row(const ScanRow& row);

}  // namespace ubb
