#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ubb/graph.hpp"

namespace ubb {

using BigInt = boost::multiprecision::cpp_int;

/// An edge set checked at construction to be a spanning tree of its graph.
class SpanningTree {
public:
    /// Throws InvalidArgument if `edges` is not a spanning tree of `g`.
    SpanningTree(const Graph& g, EdgeSubset edges);

    const EdgeSubset& edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return size_; }

    friend bool operator==(const SpanningTree& a, const SpanningTree& b) { return a.edges_ == b.edges_; }

private:
    EdgeSubset edges_;
    std::size_t size_;
};

/// Number of spanning trees by the Matrix-Tree theorem, using fraction-free
/// (Bareiss) elimination on a reduced Laplacian. 0 for disconnected graphs.
BigInt count_spanning_trees(const Graph& g);

/// Visits every spanning tree exactly once by contraction/deletion on the
/// lowest undecided edge id. Emission order is deterministic. Throws
/// ResourceLimit once more than `cap` trees have been produced, and
/// InvalidArgument if `g` is disconnected.
void for_each_spanning_tree(const Graph& g, std::size_t cap,
                            const std::function<void(const SpanningTree&)>& visit);

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g, std::size_t cap);

}  // namespace ubb
