#include "ubb/edge_subset.hpp"

#include <algorithm>
#include <string>

#include "ubb/error.hpp"

namespace ubb {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + EdgeSubset::kWordBits - 1) / EdgeSubset::kWordBits; }

}  // namespace

EdgeSubset::EdgeSubset(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

EdgeSubset::EdgeSubset(std::size_t universe, std::initializer_list<EdgeId> ids) : EdgeSubset(universe) {
    for (EdgeId e : ids) insert(e);
}

EdgeSubset::EdgeSubset(std::size_t universe, const std::vector<EdgeId>& ids) : EdgeSubset(universe) {
    for (EdgeId e : ids) insert(e);
}

EdgeSubset EdgeSubset::full(std::size_t universe) {
    EdgeSubset s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    if (const std::size_t tail = universe % kWordBits; tail != 0) s.words_.back() &= (Word{1} << tail) - 1;
    return s;
}

std::size_t EdgeSubset::size() const noexcept {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool EdgeSubset::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void EdgeSubset::check_id(EdgeId e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= universe_)
        throw InvalidArgument("edge id " + std::to_string(e) + " outside universe of size " + std::to_string(universe_));
}

void EdgeSubset::check_same(const EdgeSubset& o) const {
    if (universe_ != o.universe_) throw InvalidArgument("edge subsets over different universes");
}

void EdgeSubset::insert(EdgeId e) {
    check_id(e);
    words_[static_cast<std::size_t>(e) / kWordBits] |= Word{1} << (static_cast<std::size_t>(e) % kWordBits);
}

void EdgeSubset::erase(EdgeId e) {
    check_id(e);
    words_[static_cast<std::size_t>(e) / kWordBits] &= ~(Word{1} << (static_cast<std::size_t>(e) % kWordBits));
}

EdgeSubset& EdgeSubset::operator&=(const EdgeSubset& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

EdgeSubset& EdgeSubset::operator|=(const EdgeSubset& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

EdgeSubset& EdgeSubset::operator-=(const EdgeSubset& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

EdgeSubset EdgeSubset::complement() const { return full(universe_) - *this; }

bool EdgeSubset::disjoint(const EdgeSubset& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & o.words_[i]) != 0) return false;
    return true;
}

bool EdgeSubset::subset_of(const EdgeSubset& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
}

std::vector<EdgeId> EdgeSubset::ids() const {
    std::vector<EdgeId> out;
    out.reserve(size());
    for_each([&](EdgeId e) { out.push_back(e); });
    return out;
}

}  // namespace ubb
