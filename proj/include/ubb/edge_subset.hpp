#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ubb {

using VertexId = int;
using EdgeId = int;

/// Membership set over the edge ids `0..universe-1` of one graph. Backed by
/// 64-bit words; all set algebra is exact and requires equal universes.
class EdgeSubset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    EdgeSubset() = default;
    explicit EdgeSubset(std::size_t universe);
    EdgeSubset(std::size_t universe, std::initializer_list<EdgeId> ids);
    EdgeSubset(std::size_t universe, const std::vector<EdgeId>& ids);

    static EdgeSubset full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept;

    bool contains(EdgeId e) const noexcept {
        return (words_[static_cast<std::size_t>(e) / kWordBits] >> (static_cast<std::size_t>(e) % kWordBits)) & 1U;
    }
    void insert(EdgeId e);
    void erase(EdgeId e);

    EdgeSubset& operator&=(const EdgeSubset& o);
    EdgeSubset& operator|=(const EdgeSubset& o);
    EdgeSubset& operator-=(const EdgeSubset& o);
    friend EdgeSubset operator&(EdgeSubset a, const EdgeSubset& b) { return a &= b; }
    friend EdgeSubset operator|(EdgeSubset a, const EdgeSubset& b) { return a |= b; }
    friend EdgeSubset operator-(EdgeSubset a, const EdgeSubset& b) { return a -= b; }
    EdgeSubset complement() const;

    bool disjoint(const EdgeSubset& o) const;
    bool subset_of(const EdgeSubset& o) const;

    /// Members in increasing id order.
    std::vector<EdgeId> ids() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                const int b = std::countr_zero(bits);
                f(static_cast<EdgeId>(w * kWordBits + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    const std::vector<Word>& words() const noexcept { return words_; }

    friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;
    friend bool operator<(const EdgeSubset& a, const EdgeSubset& b) { return a.ids() < b.ids(); }

private:
    void check_same(const EdgeSubset& o) const;
    void check_id(EdgeId e) const;

    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

}  // namespace ubb
