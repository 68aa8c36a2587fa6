#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ubb {

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Colex rank of a strictly increasing index list: sum of C(a_i, i+1).
std::uint64_t colex_rank(const std::vector<int>& sorted);

/// Advance a strictly increasing k-combination of 0..n-1 to its colex
/// successor. Returns false after the last one.
bool next_colex(std::vector<int>& comb, int n);

/// Seed for stream `index` derived from a base seed with splitmix64.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform integer in [0, bound) by rejection, independent of the standard
/// library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform k-subset of 0..n-1 (Floyd's algorithm), sorted ascending.
std::vector<int> sample_subset(std::mt19937_64& rng, int n, int k);

}  // namespace ubb
