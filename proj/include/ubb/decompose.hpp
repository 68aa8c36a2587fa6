#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ubb/graph.hpp"

namespace ubb {

/// Partition of E(G) into Hamilton cycles C_0..C_{c-1}.
class HamiltonianDecomposition {
public:
    /// Throws InvalidArgument unless `cycles` partition E(g) into Hamilton cycles.
    HamiltonianDecomposition(const Graph& g, std::vector<EdgeSubset> cycles);

    const std::vector<EdgeSubset>& cycles() const noexcept { return cycles_; }
    std::size_t size() const noexcept { return cycles_.size(); }

private:
    std::vector<EdgeSubset> cycles_;
};

/// Partition of E(G) into perfect matchings F_0..F_{k-1}.
class OneFactorisation {
public:
    /// Throws InvalidArgument unless `factors` partition E(g) into perfect matchings.
    OneFactorisation(const Graph& g, std::vector<EdgeSubset> factors);

    const std::vector<EdgeSubset>& factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }
    /// Index of the factor containing edge e.
    std::size_t factor_of(EdgeId e) const { return owner_.at(static_cast<std::size_t>(e)); }

private:
    std::vector<EdgeSubset> factors_;
    std::vector<std::size_t> owner_;
};

/// H(G, F): one vertex per factor index, arc (i, j) iff F_i ∪ F_j is a
/// Hamilton cycle. Symmetric and loop-free.
class AuxDigraph {
public:
    explicit AuxDigraph(std::size_t k);

    std::size_t size() const noexcept { return k_; }
    bool has_arc(std::size_t i, std::size_t j) const { return arc_.at(i * k_ + j) != 0; }
    void add_arc(std::size_t i, std::size_t j);
    std::size_t arc_count() const;
    std::vector<std::pair<std::size_t, std::size_t>> arcs() const;

private:
    std::size_t k_;
    std::vector<unsigned char> arc_;
};

/// Loop-free permutation h of factor indices with every (i, h(i)) an arc,
/// i.e. a directed 2-factor of the auxiliary digraph.
class SuccessorMap {
public:
    /// Throws InvalidArgument unless `succ` is a fixed-point-free permutation
    /// whose pairs are all arcs of `h`.
    SuccessorMap(const AuxDigraph& h, std::vector<std::size_t> succ);

    std::size_t operator()(std::size_t i) const { return succ_.at(i); }
    const std::vector<std::size_t>& successors() const noexcept { return succ_; }
    /// Cycle lengths, sorted descending.
    std::vector<std::size_t> cycle_type() const;

private:
    std::vector<std::size_t> succ_;
};

/// Parts are nonempty, pairwise disjoint and cover E(g).
bool validate_partition(const Graph& g, const std::vector<EdgeSubset>& parts);

/// Walecki's zigzag decomposition of K_n, n odd >= 3, on K_n as built by
/// build_complete(n). Vertex n-1 plays ∞, vertices 0..n-2 are Z_{n-1}; cycle
/// i visits ∞, i, i+1, i-1, i+2, i-2, ..., i+m, ∞.
HamiltonianDecomposition walecki(const Graph& kn);
HamiltonianDecomposition walecki(int n);

/// GK_{2m} on build_complete(v): vertices 0..v-2 are Z_{v-1}, vertex v-1 is
/// ∞. F_0 = {{i,-i} : 1 <= i < m} ∪ {{0,∞}} and F_i = F_0 + i.
OneFactorisation gk_factorisation(const Graph& kv);
OneFactorisation gk_factorisation(int v);

AuxDigraph auxiliary_digraph(const Graph& g, const OneFactorisation& f);

/// Lexicographically smallest loop-free successor map, or nullopt when the
/// tails x heads bipartite graph has no perfect matching.
std::optional<SuccessorMap> find_directed_2factor(const AuxDigraph& h);

/// The explicit HKL 2-factor for GK_{2m}: the 3-cycle
/// F_{2m-2} -> F_0 -> F_1 -> F_{2m-2} plus 2-cycles F_2<->F_3, ...,
/// F_{2m-4}<->F_{2m-3}. Checked against the exact auxiliary digraph.
SuccessorMap hkl_successor_for_k2m(const Graph& kv, const OneFactorisation& f);

/// Keeps only the listed factors: returns the spanning subgraph they form
/// (original edge order preserved) and its factorisation in listed order.
struct FactorSubgraph {
    Graph graph;
    OneFactorisation factorisation;
};
FactorSubgraph factor_subgraph(const Graph& g, const OneFactorisation& f,
                               const std::vector<std::size_t>& keep);

}  // namespace ubb
