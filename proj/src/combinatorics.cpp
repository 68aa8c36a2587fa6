#include "ubb/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace ubb {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t colex_rank(const std::vector<int>& sorted) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        rank += binomial(static_cast<std::uint64_t>(sorted[i]), i + 1);
    return rank;
}

bool next_colex(std::vector<int>& comb, int n) {
    const std::size_t k = comb.size();
    for (std::size_t i = 0; i < k; ++i) {
        const int limit = i + 1 < k ? comb[i + 1] : n;
        if (comb[i] + 1 < limit) {
            ++comb[i];
            for (std::size_t j = 0; j < i; ++j) comb[j] = static_cast<int>(j);
            return true;
        }
    }
    return false;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

std::vector<int> sample_subset(std::mt19937_64& rng, int n, int k) {
    std::set<int> chosen;
    for (int j = n - k; j < n; ++j) {
        const int x = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(j) + 1));
        if (!chosen.insert(x).second) chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

}  // namespace ubb
