#pragma once

#include "ubb/graph.hpp"

namespace ubb {

/// True iff `g` minus `removed` is connected. Graphs with at most one vertex
/// count as connected.
bool is_connected(const Graph& g, const EdgeSubset& removed);
bool is_connected(const Graph& g);

/// |s| == n-1 and s connects every vertex.
bool is_spanning_tree(const Graph& g, const EdgeSubset& s);

/// s is a connected 2-regular spanning subgraph.
bool is_hamilton_cycle(const Graph& g, const EdgeSubset& s);

/// Every vertex has degree exactly one in s.
bool is_perfect_matching(const Graph& g, const EdgeSubset& s);

/// Global minimum edge cut via Stoer-Wagner on unit weights. A disconnected
/// graph has connectivity 0 and an empty cut.
int edge_connectivity(const Graph& g);

/// Edges crossing a minimum cut. Throws InvalidArgument when `g` is
/// disconnected or has fewer than two vertices.
EdgeSubset min_edge_cut(const Graph& g);

/// Degree of every vertex inside `s`.
std::vector<int> degrees_in(const Graph& g, const EdgeSubset& s);

}  // namespace ubb
