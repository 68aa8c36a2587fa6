#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ubb/edge_subset.hpp"

namespace ubb {

/// Outcome of scanning t-subsets of an edge universe for one that meets every
/// tree. `checked` is the number of subsets in colex order up to and including
/// the witness, or all C(E, t) of them when none exists.
struct UncoveredSearch {
    std::optional<std::vector<EdgeId>> witness;
    std::uint64_t checked = 0;
};

/// Reference implementation: walks every t-subset in colex order and scans
/// the trees in index order for one disjoint from it.
UncoveredSearch find_uncovered_serial(const std::vector<EdgeSubset>& trees, std::size_t edge_count, int t);

/// Depth-first colex walk that ANDs per-edge "trees avoiding e" masks along
/// the prefix and prunes as soon as the mask empties. Subtrees keyed by the
/// two largest elements run as OpenMP tasks; the colex-least witness wins, so
/// the result does not depend on `threads` (0 = runtime default).
UncoveredSearch find_uncovered_parallel(const std::vector<EdgeSubset>& trees, std::size_t edge_count, int t,
                                        int threads = 0);

/// Checks `samples` uniform t-subsets, sample i drawn from derive_seed(seed, i).
/// The witness is the colex-least uncovered sample; `checked` = samples.
UncoveredSearch find_uncovered_sampled(const std::vector<EdgeSubset>& trees, std::size_t edge_count, int t,
                                       std::uint64_t samples, std::uint64_t seed, int threads = 0);

}  // namespace ubb
