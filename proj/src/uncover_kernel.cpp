#include "ubb/uncover_kernel.hpp"

#include <atomic>
#include <limits>
#include <numeric>

#include <omp.h>

#include "ubb/combinatorics.hpp"

namespace ubb {

namespace {

using Word = std::uint64_t;

// avoid[e * words + w]: bit i set iff tree i does not contain edge e.
struct AvoidMasks {
    std::size_t words;
    std::vector<Word> bits;

    AvoidMasks(const std::vector<EdgeSubset>& trees, std::size_t edge_count)
        : words((trees.size() + 63) / 64), bits(edge_count * words, 0) {
        for (std::size_t e = 0; e < edge_count; ++e)
            for (std::size_t i = 0; i < trees.size(); ++i)
                if (!trees[i].contains(static_cast<EdgeId>(e))) bits[e * words + i / 64] |= Word{1} << (i % 64);
    }

    const Word* of(int e) const { return bits.data() + static_cast<std::size_t>(e) * words; }
};

bool all_zero(const Word* m, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w)
        if (m[w] != 0) return false;
    return true;
}

// Depth-first walk of the colex order below a fixed prefix. `chosen` holds
// the elements picked so far from the top down; `remaining` more are needed,
// all smaller than `bound`.
class PrefixWalker {
public:
    PrefixWalker(const AvoidMasks& masks, int t) : masks_(masks), stack_(static_cast<std::size_t>(t + 1) * masks.words) {}

    // Returns the colex-least uncovered completion of `chosen`, if any.
    std::optional<std::vector<int>> run(std::vector<int> chosen, const Word* prefix, int remaining, int bound) {
        std::copy(prefix, prefix + masks_.words, slot(remaining));
        chosen_ = std::move(chosen);
        if (all_zero(prefix, masks_.words)) return complete_with_smallest(remaining);
        if (remaining == 0) return std::nullopt;
        if (descend(remaining, bound)) return sorted_witness();
        return std::nullopt;
    }

private:
    Word* slot(int depth) { return stack_.data() + static_cast<std::size_t>(depth) * masks_.words; }

    bool descend(int remaining, int bound) {
        const Word* parent = slot(remaining);
        Word* mine = slot(remaining - 1);
        for (int x = remaining - 1; x < bound; ++x) {
            const Word* av = masks_.of(x);
            Word any = 0;
            for (std::size_t w = 0; w < masks_.words; ++w) {
                mine[w] = parent[w] & av[w];
                any |= mine[w];
            }
            if (any == 0) {
                chosen_.push_back(x);
                for (int j = remaining - 2; j >= 0; --j) chosen_.push_back(j);
                return true;
            }
            if (remaining > 1) {
                chosen_.push_back(x);
                if (descend(remaining - 1, x)) return true;
                chosen_.pop_back();
            }
        }
        return false;
    }

    std::optional<std::vector<int>> complete_with_smallest(int remaining) {
        for (int j = remaining - 1; j >= 0; --j) chosen_.push_back(j);
        return sorted_witness();
    }

    std::vector<int> sorted_witness() const { return {chosen_.rbegin(), chosen_.rend()}; }

    const AvoidMasks& masks_;
    std::vector<Word> stack_;
    std::vector<int> chosen_;
};

std::vector<EdgeId> to_ids(const std::vector<int>& v) { return {v.begin(), v.end()}; }

}  // namespace

UncoveredSearch find_uncovered_serial(const std::vector<EdgeSubset>& trees, std::size_t edge_count, int t) {
    UncoveredSearch out;
    const int n = static_cast<int>(edge_count);
    if (t < 0 || t > n) return out;
    std::vector<int> comb(static_cast<std::size_t>(t));
    std::iota(comb.begin(), comb.end(), 0);
    do {
        ++out.checked;
        bool avoided = false;
        for (const auto& tree : trees) {
            bool disjoint = true;
            for (int e : comb)
                if (tree.contains(e)) {
                    disjoint = false;
                    break;
                }
            if (disjoint) {
                avoided = true;
                break;
            }
        }
        if (!avoided) {
            out.witness = to_ids(comb);
            return out;
        }
    } while (next_colex(comb, n));
    return out;
}

UncoveredSearch find_uncovered_parallel(const std::vector<EdgeSubset>& trees, std::size_t edge_count, int t,
                                        int threads) {
    UncoveredSearch out;
    const int n = static_cast<int>(edge_count);
    if (t < 0 || t > n) return out;
    const AvoidMasks masks(trees, edge_count);
    const std::size_t words = masks.words;

    std::optional<std::vector<int>> found;
    if (t == 0) {
        if (trees.empty()) found = std::vector<int>{};
    } else {
        // Tasks are the one or two largest elements, in colex order.
        std::vector<std::pair<int, int>> tasks;
        for (int a1 = t - 1; a1 < n; ++a1) {
            if (t == 1) {
                tasks.emplace_back(a1, -1);
            } else {
                for (int a2 = t - 2; a2 < a1; ++a2) tasks.emplace_back(a1, a2);
            }
        }
        const auto task_count = static_cast<long long>(tasks.size());
        std::vector<std::optional<std::vector<int>>> results(tasks.size());
        std::atomic<long long> best{std::numeric_limits<long long>::max()};

        const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nthreads)
        {
            PrefixWalker walker(masks, t);
            std::vector<Word> prefix(words);
#pragma omp for schedule(dynamic, 16)
            for (long long i = 0; i < task_count; ++i) {
                if (i > best.load(std::memory_order_relaxed)) continue;
                const auto [a1, a2] = tasks[static_cast<std::size_t>(i)];
                const Word* m1 = masks.of(a1);
                std::vector<int> chosen{a1};
                int remaining = t - 1, bound = a1;
                if (a2 >= 0) {
                    const Word* m2 = masks.of(a2);
                    for (std::size_t w = 0; w < words; ++w) prefix[w] = m1[w] & m2[w];
                    chosen.push_back(a2);
                    remaining = t - 2;
                    bound = a2;
                } else {
                    std::copy(m1, m1 + words, prefix.begin());
                }
                auto w = walker.run(std::move(chosen), prefix.data(), remaining, bound);
                if (w) {
                    results[static_cast<std::size_t>(i)] = std::move(w);
                    long long cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                }
            }
        }
        if (best.load() != std::numeric_limits<long long>::max()) found = results[static_cast<std::size_t>(best.load())];
    }

    if (found) {
        out.checked = colex_rank(*found) + 1;
        out.witness = to_ids(*found);
    } else {
        out.checked = binomial(edge_count, static_cast<std::uint64_t>(t));
    }
    return out;
}

UncoveredSearch find_uncovered_sampled(const std::vector<EdgeSubset>& trees, std::size_t edge_count, int t,
                                       std::uint64_t samples, std::uint64_t seed, int threads) {
    UncoveredSearch out;
    out.checked = samples;
    const int n = static_cast<int>(edge_count);
    if (t < 0 || t > n) return out;
    const AvoidMasks masks(trees, edge_count);
    const std::size_t words = masks.words;

    std::optional<std::vector<int>> best;
    std::uint64_t best_rank = std::numeric_limits<std::uint64_t>::max();
    const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nthreads)
    {
        std::optional<std::vector<int>> local;
        std::uint64_t local_rank = std::numeric_limits<std::uint64_t>::max();
        std::vector<Word> acc(words);
#pragma omp for schedule(static)
        for (long long i = 0; i < static_cast<long long>(samples); ++i) {
            std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
            const auto subset = sample_subset(rng, n, t);
            std::fill(acc.begin(), acc.end(), ~Word{0});
            if (words > 0 && trees.size() % 64 != 0) acc.back() = (Word{1} << (trees.size() % 64)) - 1;
            for (int e : subset) {
                const Word* av = masks.of(e);
                for (std::size_t w = 0; w < words; ++w) acc[w] &= av[w];
            }
            if (all_zero(acc.data(), words)) {
                const std::uint64_t r = colex_rank(subset);
                if (r < local_rank) {
                    local_rank = r;
                    local = subset;
                }
            }
        }
#pragma omp critical
        {
            if (local && local_rank < best_rank) {
                best_rank = local_rank;
                best = std::move(local);
            }
        }
    }
    if (best) out.witness = to_ids(*best);
    return out;
}

}  // namespace ubb
