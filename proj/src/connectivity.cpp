#include "ubb/connectivity.hpp"

#include <limits>
#include <numeric>

#include "ubb/error.hpp"

namespace ubb {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

// Connected components of the subgraph formed by `kept`, as a count.
std::size_t component_count(const Graph& g, const EdgeSubset& kept) {
    DisjointSets ds(static_cast<std::size_t>(g.vertex_count()));
    std::size_t components = static_cast<std::size_t>(g.vertex_count());
    kept.for_each([&](EdgeId e) {
        const auto& ed = g.edge(e);
        if (ds.unite(static_cast<std::size_t>(ed.u), static_cast<std::size_t>(ed.v))) --components;
    });
    return components;
}

struct Cut {
    int weight;
    std::vector<bool> side;
};

// Stoer-Wagner minimum cut on the unit-weight multigraph matrix.
Cut stoer_wagner(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
    for (const auto& e : g.edges()) {
        ++w[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
        ++w[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)];
    }
    // members[v]: original vertices merged into super-vertex v
    std::vector<std::vector<std::size_t>> members(n);
    for (std::size_t v = 0; v < n; ++v) members[v] = {v};
    std::vector<bool> merged(n, false);

    Cut best{std::numeric_limits<int>::max(), {}};
    for (std::size_t phase = 1; phase < n; ++phase) {
        std::vector<int> key(n, 0);
        std::vector<bool> added(n, false);
        std::size_t prev = n, last = n;
        for (std::size_t step = 0; step < n - phase + 1; ++step) {
            std::size_t sel = n;
            for (std::size_t v = 0; v < n; ++v)
                if (!merged[v] && !added[v] && (sel == n || key[v] > key[sel])) sel = v;
            added[sel] = true;
            prev = last;
            last = sel;
            for (std::size_t v = 0; v < n; ++v)
                if (!merged[v] && !added[v]) key[v] += w[sel][v];
        }
        if (key[last] < best.weight) {
            best.weight = key[last];
            best.side.assign(n, false);
            for (std::size_t v : members[last]) best.side[v] = true;
        }
        // merge `last` into `prev`
        members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
        for (std::size_t v = 0; v < n; ++v) {
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        w[prev][prev] = 0;
        merged[last] = true;
    }
    return best;
}

}  // namespace

bool is_connected(const Graph& g, const EdgeSubset& removed) {
    if (g.vertex_count() <= 1) return true;
    return component_count(g, removed.complement()) == 1;
}

bool is_connected(const Graph& g) { return is_connected(g, g.no_edges()); }

bool is_spanning_tree(const Graph& g, const EdgeSubset& s) {
    if (s.universe() != g.edge_count()) return false;
    if (g.vertex_count() == 0) return s.empty();
    if (s.size() != static_cast<std::size_t>(g.vertex_count() - 1)) return false;
    return component_count(g, s) == 1;
}

std::vector<int> degrees_in(const Graph& g, const EdgeSubset& s) {
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    s.for_each([&](EdgeId e) {
        ++deg[static_cast<std::size_t>(g.edge(e).u)];
        ++deg[static_cast<std::size_t>(g.edge(e).v)];
    });
    return deg;
}

bool is_hamilton_cycle(const Graph& g, const EdgeSubset& s) {
    if (s.universe() != g.edge_count() || g.vertex_count() < 3) return false;
    if (s.size() != static_cast<std::size_t>(g.vertex_count())) return false;
    for (int d : degrees_in(g, s))
        if (d != 2) return false;
    return component_count(g, s) == 1;
}

bool is_perfect_matching(const Graph& g, const EdgeSubset& s) {
    if (s.universe() != g.edge_count()) return false;
    for (int d : degrees_in(g, s))
        if (d != 1) return false;
    return true;
}

int edge_connectivity(const Graph& g) {
    if (g.vertex_count() < 2 || !is_connected(g)) return 0;
    return stoer_wagner(g).weight;
}

EdgeSubset min_edge_cut(const Graph& g) {
    if (g.vertex_count() < 2) throw InvalidArgument("min_edge_cut needs at least two vertices");
    if (!is_connected(g)) throw InvalidArgument("min_edge_cut needs a connected graph");
    const Cut cut = stoer_wagner(g);
    EdgeSubset out = g.no_edges();
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
        const auto& ed = g.edge(e);
        if (cut.side[static_cast<std::size_t>(ed.u)] != cut.side[static_cast<std::size_t>(ed.v)]) out.insert(e);
    }
    return out;
}

}  // namespace ubb
