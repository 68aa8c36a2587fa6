#include "ubb/spanning_tree.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "ubb/connectivity.hpp"
#include "ubb/error.hpp"

namespace ubb {

SpanningTree::SpanningTree(const Graph& g, EdgeSubset edges) : edges_(std::move(edges)), size_(edges_.size()) {
    if (!is_spanning_tree(g, edges_)) throw InvalidArgument("edge set is not a spanning tree");
}

BigInt count_spanning_trees(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return BigInt(1);
    if (!is_connected(g)) return BigInt(0);

    // Reduced Laplacian: drop the last row and column.
    const auto m = static_cast<std::size_t>(n - 1);
    std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m, 0));
    for (const auto& e : g.edges()) {
        const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
        if (u < m) a[u][u] += 1;
        if (v < m) a[v][v] += 1;
        if (u < m && v < m) {
            a[u][v] -= 1;
            a[v][u] -= 1;
        }
    }

    // Bareiss: every intermediate division is exact.
    int sign = 1;
    BigInt prev_pivot = 1;
    for (std::size_t k = 0; k < m; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < m && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == m) return BigInt(0);
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < m; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev_pivot;
            }
            a[i][k] = 0;
        }
        prev_pivot = a[k][k];
    }
    BigInt det = a[m - 1][m - 1];
    return sign < 0 ? BigInt(-det) : det;
}

namespace {

class TreeEnumerator {
public:
    TreeEnumerator(const Graph& g, std::size_t cap, const std::function<void(const SpanningTree&)>& visit)
        : g_(g), cap_(cap), visit_(visit), target_(static_cast<std::size_t>(g.vertex_count() - 1)) {}

    void run() {
        std::vector<int> comp(static_cast<std::size_t>(g_.vertex_count()));
        std::iota(comp.begin(), comp.end(), 0);
        recurse(0, g_.no_edges(), 0, g_.no_edges(), comp);
    }

private:
    static int root(std::vector<int>& comp, int x) {
        while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)];
        return x;
    }

    void recurse(EdgeId next, const EdgeSubset& chosen, std::size_t chosen_count, const EdgeSubset& deleted,
                 std::vector<int>& comp) {
        if (chosen_count == target_) {
            if (++emitted_ > cap_)
                throw ResourceLimit("more than " + std::to_string(cap_) + " spanning trees");
            visit_(SpanningTree(g_, chosen));
            return;
        }
        // Lowest undecided edge that joins two components of the forest so far.
        EdgeId e = next;
        int ru = 0, rv = 0;
        for (; e < static_cast<EdgeId>(g_.edge_count()); ++e) {
            ru = root(comp, g_.edge(e).u);
            rv = root(comp, g_.edge(e).v);
            if (ru != rv) break;
        }
        if (e == static_cast<EdgeId>(g_.edge_count())) return;

        {
            EdgeSubset with = chosen;
            with.insert(e);
            std::vector<int> merged = comp;
            merged[static_cast<std::size_t>(rv)] = ru;
            recurse(e + 1, with, chosen_count + 1, deleted, merged);
        }
        EdgeSubset without = deleted;
        without.insert(e);
        if (is_connected(g_, without)) recurse(e + 1, chosen, chosen_count, without, comp);
    }

    const Graph& g_;
    std::size_t cap_;
    const std::function<void(const SpanningTree&)>& visit_;
    std::size_t target_;
    std::size_t emitted_ = 0;
};

}  // namespace

void for_each_spanning_tree(const Graph& g, std::size_t cap, const std::function<void(const SpanningTree&)>& visit) {
    if (!is_connected(g)) throw InvalidArgument("spanning tree enumeration needs a connected graph");
    if (g.vertex_count() == 0) return;
    TreeEnumerator(g, cap, visit).run();
}

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g, std::size_t cap) {
    std::vector<SpanningTree> out;
    for_each_spanning_tree(g, cap, [&](const SpanningTree& t) { out.push_back(t); });
    return out;
}

}  // namespace ubb
