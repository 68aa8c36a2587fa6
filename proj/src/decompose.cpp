#include "ubb/decompose.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "ubb/connectivity.hpp"
#include "ubb/error.hpp"

namespace ubb {

bool validate_partition(const Graph& g, const std::vector<EdgeSubset>& parts) {
    EdgeSubset seen = g.no_edges();
    for (const auto& p : parts) {
        if (p.universe() != g.edge_count() || p.empty() || !p.disjoint(seen)) return false;
        seen |= p;
    }
    return seen == g.all_edges();
}

HamiltonianDecomposition::HamiltonianDecomposition(const Graph& g, std::vector<EdgeSubset> cycles)
    : cycles_(std::move(cycles)) {
    if (!validate_partition(g, cycles_)) throw InvalidArgument("cycles do not partition the edge set");
    for (std::size_t i = 0; i < cycles_.size(); ++i)
        if (!is_hamilton_cycle(g, cycles_[i]))
            throw InvalidArgument("part " + std::to_string(i) + " is not a Hamilton cycle");
}

OneFactorisation::OneFactorisation(const Graph& g, std::vector<EdgeSubset> factors)
    : factors_(std::move(factors)), owner_(g.edge_count(), 0) {
    if (!validate_partition(g, factors_)) throw InvalidArgument("factors do not partition the edge set");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (!is_perfect_matching(g, factors_[i]))
            throw InvalidArgument("factor " + std::to_string(i) + " is not a perfect matching");
        factors_[i].for_each([&](EdgeId e) { owner_[static_cast<std::size_t>(e)] = i; });
    }
}

AuxDigraph::AuxDigraph(std::size_t k) : k_(k), arc_(k * k, 0) {}

void AuxDigraph::add_arc(std::size_t i, std::size_t j) {
    if (i >= k_ || j >= k_) throw InvalidArgument("arc endpoint out of range");
    if (i == j) throw InvalidArgument("auxiliary digraph has no loops");
    arc_[i * k_ + j] = 1;
}

std::size_t AuxDigraph::arc_count() const {
    return static_cast<std::size_t>(std::count(arc_.begin(), arc_.end(), 1));
}

std::vector<std::pair<std::size_t, std::size_t>> AuxDigraph::arcs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = 0; j < k_; ++j)
            if (has_arc(i, j)) out.emplace_back(i, j);
    return out;
}

SuccessorMap::SuccessorMap(const AuxDigraph& h, std::vector<std::size_t> succ) : succ_(std::move(succ)) {
    if (succ_.size() != h.size()) throw InvalidArgument("successor map has the wrong length");
    std::vector<bool> hit(succ_.size(), false);
    for (std::size_t i = 0; i < succ_.size(); ++i) {
        const std::size_t j = succ_[i];
        if (j >= succ_.size() || hit[j]) throw InvalidArgument("successor map is not a permutation");
        if (j == i) throw InvalidArgument("successor map has a fixed point at " + std::to_string(i));
        if (!h.has_arc(i, j))
            throw InvalidArgument("(" + std::to_string(i) + "," + std::to_string(j) + ") is not an arc");
        hit[j] = true;
    }
}

std::vector<std::size_t> SuccessorMap::cycle_type() const {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(succ_.size(), false);
    for (std::size_t start = 0; start < succ_.size(); ++start) {
        if (seen[start]) continue;
        std::size_t len = 0;
        for (std::size_t i = start; !seen[i]; i = succ_[i]) {
            seen[i] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

HamiltonianDecomposition walecki(const Graph& kn) {
    const int n = kn.vertex_count();
    if (n < 3 || n % 2 == 0) throw InvalidArgument("Walecki decomposition needs odd n >= 3");
    if (kn.edge_count() != static_cast<std::size_t>(n) * (n - 1) / 2) throw InvalidArgument("graph is not complete");
    const int two_m = n - 1, m = two_m / 2, inf = n - 1;
    auto mod = [two_m](int x) { return ((x % two_m) + two_m) % two_m; };

    std::vector<EdgeSubset> cycles;
    for (int i = 0; i < m; ++i) {
        std::vector<int> walk{inf, i};
        for (int j = 1; j < m; ++j) {
            walk.push_back(mod(i + j));
            walk.push_back(mod(i - j));
        }
        walk.push_back(mod(i + m));
        walk.push_back(inf);
        EdgeSubset c = kn.no_edges();
        for (std::size_t s = 0; s + 1 < walk.size(); ++s) c.insert(kn.edge_id(walk[s], walk[s + 1]));
        cycles.push_back(std::move(c));
    }
    return HamiltonianDecomposition(kn, std::move(cycles));
}

HamiltonianDecomposition walecki(int n) {
    if (n < 3 || n % 2 == 0) throw InvalidArgument("Walecki decomposition needs odd n >= 3");
    return walecki(build_complete(n));
}

OneFactorisation gk_factorisation(const Graph& kv) {
    const int v = kv.vertex_count();
    if (v < 4 || v % 2 != 0) throw InvalidArgument("GK factorisation needs even v >= 4");
    if (kv.edge_count() != static_cast<std::size_t>(v) * (v - 1) / 2) throw InvalidArgument("graph is not complete");
    const int mod_base = v - 1, m = v / 2, inf = v - 1;
    auto mod = [mod_base](int x) { return ((x % mod_base) + mod_base) % mod_base; };

    std::vector<EdgeSubset> factors;
    for (int shift = 0; shift < mod_base; ++shift) {
        EdgeSubset f = kv.no_edges();
        for (int i = 1; i < m; ++i) f.insert(kv.edge_id(mod(i + shift), mod(-i + shift)));
        f.insert(kv.edge_id(mod(shift), inf));
        factors.push_back(std::move(f));
    }
    return OneFactorisation(kv, std::move(factors));
}

OneFactorisation gk_factorisation(int v) {
    if (v < 4 || v % 2 != 0) throw InvalidArgument("GK factorisation needs even v >= 4");
    return gk_factorisation(build_complete(v));
}

AuxDigraph auxiliary_digraph(const Graph& g, const OneFactorisation& f) {
    AuxDigraph h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (is_hamilton_cycle(g, f.factors()[i] | f.factors()[j])) {
                h.add_arc(i, j);
                h.add_arc(j, i);
            }
        }
    }
    return h;
}

namespace {

// Kuhn augmenting-path matching of tails to heads restricted to tails >= from,
// with heads in `taken` unavailable. Returns whether every such tail matches.
bool has_perfect_completion(const AuxDigraph& h, std::size_t from, const std::vector<bool>& taken) {
    const std::size_t k = h.size();
    std::vector<std::size_t> owner(k, k);  // head -> tail
    std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t tail, std::vector<bool>& visited) {
        for (std::size_t head = 0; head < k; ++head) {
            if (taken[head] || head == tail || !h.has_arc(tail, head) || visited[head]) continue;
            visited[head] = true;
            if (owner[head] == k || augment(owner[head], visited)) {
                owner[head] = tail;
                return true;
            }
        }
        return false;
    };
    for (std::size_t tail = from; tail < k; ++tail) {
        std::vector<bool> visited(k, false);
        if (!augment(tail, visited)) return false;
    }
    return true;
}

}  // namespace

std::optional<SuccessorMap> find_directed_2factor(const AuxDigraph& h) {
    const std::size_t k = h.size();
    std::vector<bool> taken(k, false);
    if (k == 0 || !has_perfect_completion(h, 0, taken)) return std::nullopt;
    // Fix tails in index order, each to the smallest head that still admits a
    // perfect matching on the remaining tails.
    std::vector<std::size_t> succ(k, k);
    for (std::size_t tail = 0; tail < k; ++tail) {
        for (std::size_t head = 0; head < k; ++head) {
            if (taken[head] || head == tail || !h.has_arc(tail, head)) continue;
            taken[head] = true;
            if (has_perfect_completion(h, tail + 1, taken)) {
                succ[tail] = head;
                break;
            }
            taken[head] = false;
        }
    }
    return SuccessorMap(h, std::move(succ));
}

SuccessorMap hkl_successor_for_k2m(const Graph& kv, const OneFactorisation& f) {
    const int v = kv.vertex_count();
    if (v < 4 || v % 2 != 0 || f.size() != static_cast<std::size_t>(v - 1))
        throw InvalidArgument("HKL successor needs a GK-style factorisation of K_2m");
    const std::size_t k = f.size();
    std::vector<std::size_t> succ(k);
    // 3-cycle F_{-1} -> F_0 -> F_1 -> F_{-1}
    succ[k - 1] = 0;
    succ[0] = 1;
    succ[1] = k - 1;
    for (std::size_t i = 2; i + 1 < k - 1; i += 2) {
        succ[i] = i + 1;
        succ[i + 1] = i;
    }
    return SuccessorMap(auxiliary_digraph(kv, f), std::move(succ));
}

FactorSubgraph factor_subgraph(const Graph& g, const OneFactorisation& f, const std::vector<std::size_t>& keep) {
    EdgeSubset kept = g.no_edges();
    for (std::size_t i : keep) {
        if (i >= f.size()) throw InvalidArgument("factor index out of range");
        kept |= f.factors()[i];
    }
    Graph sub = g.edge_subgraph(kept);
    std::vector<EdgeSubset> factors;
    for (std::size_t i : keep) {
        EdgeSubset part = sub.no_edges();
        f.factors()[i].for_each([&](EdgeId e) { part.insert(sub.edge_id(g.edge(e).u, g.edge(e).v)); });
        factors.push_back(std::move(part));
    }
    OneFactorisation sub_f(sub, std::move(factors));
    return {std::move(sub), std::move(sub_f)};
}

}  // namespace ubb
