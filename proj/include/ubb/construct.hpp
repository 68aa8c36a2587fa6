#pragma once

#include <vector>

#include "ubb/decompose.hpp"
#include "ubb/uncovering.hpp"

namespace ubb {

/// (m-1)-UBB of K_{m,n} of size m^2: for u in X and v in S (the first m
/// vertices of Y), the double star T_uv holding every edge at u or v.
Uncovering ubb_complete_bipartite(int m, int n);

/// (2c-1)-UBB from a decomposition into c Hamilton cycles: the paths C_i \ e,
/// ordered by (cycle index, edge id). |E(g)| trees.
Uncovering ubb_hamdec(const Graph& g, const HamiltonianDecomposition& d);

/// (k-1)-UBB of a k-regular graph from a 1-factorisation and a directed
/// 2-factor h: for e in F, the path (F ∪ h(F)) \ e. Ordered by (factor index,
/// edge id). |E(g)| trees.
Uncovering ubb_2factor(const Graph& g, const OneFactorisation& f, const SuccessorMap& h);

/// The six-tree 2-UBB of W_n (even and odd recipes). Requires n >= 3.
Uncovering ubb_wheel(int n);

/// (n-2)-UBB of K_n with C(n,2) trees: Walecki + paths for odd n, GK_n + HKL
/// successor + 2-factor paths for even n. Requires n >= 3.
Uncovering ubb_complete(int n);

/// (t)-UBB from t+1 or more pairwise edge-disjoint spanning trees.
Uncovering ubb_from_disjoint_trees(const Graph& g, std::vector<SpanningTree> trees, int t);

/// The failure set that only C_i \ e avoids: e plus two edges from every other
/// cycle (2c-1 edges).
EdgeSubset hamdec_blocking_set(const Graph& g, const HamiltonianDecomposition& d,
                               std::size_t cycle, EdgeId e);

/// The failure set that only (F ∪ h(F)) \ e avoids: e plus one edge from every
/// factor other than F and h(F) (k-1 edges).
EdgeSubset two_factor_blocking_set(const Graph& g, const OneFactorisation& f,
                                   const SuccessorMap& h, EdgeId e);

}  // namespace ubb
