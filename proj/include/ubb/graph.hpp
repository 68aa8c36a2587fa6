#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ubb/edge_subset.hpp"

namespace ubb {

struct Edge {
    VertexId u;
    VertexId v;

    VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
    VertexId neighbour;
    EdgeId edge;
};

/// Simple undirected graph with a fixed edge order. Edge ids index `edges()`
/// and every EdgeSubset built against this graph refers to that order.
/// Endpoints are stored normalised (u < v). Immutable after construction.
class Graph {
public:
    Graph() = default;
    /// Throws InvalidArgument on self-loops, duplicate edges or endpoints out of range.
    Graph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges,
          std::vector<std::string> labels = {});

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
    const std::vector<Incidence>& incident(VertexId v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
    /// Like find_edge but throws InvalidArgument when absent.
    EdgeId edge_id(VertexId u, VertexId v) const;

    /// Optional per-vertex names (e.g. the wheel hub). Empty when unnamed.
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    EdgeSubset no_edges() const { return EdgeSubset(edge_count()); }
    EdgeSubset all_edges() const { return EdgeSubset::full(edge_count()); }

    /// Same vertex count and same edge set, ignoring edge order.
    bool same_edge_set(const Graph& other) const;

    /// Subgraph on the same vertices keeping only `keep`, edge order preserved.
    Graph edge_subgraph(const EdgeSubset& keep) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adj_;
    std::vector<std::string> labels_;
};

/// Edge ids of the wheel's rim (r_i joins v_i and v_{i+1 mod n}) and spokes
/// (s_i joins v_i and the hub).
struct WheelLabels {
    std::vector<EdgeId> rim;
    std::vector<EdgeId> spokes;
    VertexId hub = 0;
};

struct Wheel {
    Graph graph;
    WheelLabels labels;
};

// Named families. Edge ids follow a fixed order per builder:
//   complete / complete_bipartite: lexicographic in (u, v)
//   wheel: r_0..r_{n-1} then s_0..s_{n-1}; rim vertices 0..n-1, hub n
//   circulant: step-major, then by i ascending; edge {i, i+s mod n}

/// K_n. Requires n >= 2.
Graph build_complete(int n);
/// K_{m,n} with X = 0..m-1, Y = m..m+n-1. Requires 2 <= m <= n.
Graph build_complete_bipartite(int m, int n);
/// W_n. Requires n >= 3.
Wheel build_wheel(int n);
/// Circulant graph; each step s must satisfy 1 <= s <= n/2, steps distinct.
Graph build_circulant(int n, const std::vector<int>& steps);
/// C_n. Requires n >= 3.
Graph build_cycle(int n);

}  // namespace ubb
