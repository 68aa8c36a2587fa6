#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ubb/uncovering.hpp"

namespace ubb {

enum class VerdictStatus { valid, invalid, sampled_pass, precondition_violation };

std::string to_string(VerdictStatus s);

/// Result of checking an uncovering. `witness` is present iff the status is
/// invalid: a t-set meeting every tree.
struct Verdict {
    VerdictStatus status = VerdictStatus::valid;
    std::optional<EdgeSubset> witness;
    std::uint64_t subsets_checked = 0;
    /// Edge connectivity, filled in by the precondition check.
    int lambda = 0;

    bool ok() const noexcept { return status == VerdictStatus::valid || status == VerdictStatus::sampled_pass; }
    nlohmann::json to_json() const;
};

struct VerifyOptions {
    enum class Mode { exhaustive, sampled };
    Mode mode = Mode::exhaustive;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    /// Exhaustive mode refuses instances with more subsets than this.
    std::uint64_t ceiling = 100'000'000;
    int threads = 0;
    /// Use the serial reference kernel (tests and benchmarks).
    bool serial = false;
};

/// Checks that every t-subset of edges misses some tree. A claimed t that is
/// not below the edge connectivity yields precondition_violation. Throws
/// ResourceLimit when exhaustive mode would exceed the ceiling.
Verdict verify_ubb(const Uncovering& u, const VerifyOptions& opts = {});

struct MinimalityReport {
    bool minimal = false;
    /// Per tree: a t-set avoided by that tree alone, if one exists.
    std::vector<std::optional<EdgeSubset>> witnesses;

    nlohmann::json to_json() const;
};

/// Drops each tree in turn and re-verifies. Throws InvalidArgument if `u`
/// itself does not verify.
MinimalityReport is_minimal_ubb(const Uncovering& u, const VerifyOptions& opts = {});

/// Schönheim lower bound for an (n, k, t)-uncovering, evaluated innermost
/// ceiling first in exact integer arithmetic. Requires n > k >= 1 and
/// 1 <= t <= n - k.
std::uint64_t schonheim_bound(int n, int k, int t);

/// Complements of the trees: blocks of an (|E|, |E|-(n-1), t) covering design.
std::vector<EdgeSubset> export_covering_design(const Uncovering& u);

/// Every t-subset of 0..n-1 lies inside some block. Blocks are given as point
/// lists; points outside 0..n-1 throw InvalidArgument.
bool verify_covering(int n, const std::vector<std::vector<int>>& blocks, int t);
bool verify_covering(int n, const std::vector<EdgeSubset>& blocks, int t);

}  // namespace ubb
