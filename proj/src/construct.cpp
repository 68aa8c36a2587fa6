#include "ubb/construct.hpp"

#include <string>

#include "ubb/connectivity.hpp"
#include "ubb/error.hpp"

namespace ubb {

Uncovering ubb_complete_bipartite(int m, int n) {
    Graph g = build_complete_bipartite(m, n);
    std::vector<SpanningTree> trees;
    for (VertexId u = 0; u < m; ++u) {
        for (VertexId v = m; v < 2 * m; ++v) {
            EdgeSubset s = g.no_edges();
            for (const auto& inc : g.incident(u)) s.insert(inc.edge);
            for (const auto& inc : g.incident(v)) s.insert(inc.edge);
            trees.emplace_back(g, std::move(s));
        }
    }
    return Uncovering(std::move(g), m - 1, std::move(trees), "complete_bipartite");
}

Uncovering ubb_hamdec(const Graph& g, const HamiltonianDecomposition& d) {
    std::vector<SpanningTree> trees;
    for (const auto& cycle : d.cycles()) {
        cycle.for_each([&](EdgeId e) {
            EdgeSubset path = cycle;
            path.erase(e);
            trees.emplace_back(g, std::move(path));
        });
    }
    return Uncovering(g, 2 * static_cast<int>(d.size()) - 1, std::move(trees), "hamiltonian_decomposition");
}

Uncovering ubb_2factor(const Graph& g, const OneFactorisation& f, const SuccessorMap& h) {
    const auto k = static_cast<int>(f.size());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != k) throw InvalidArgument("graph is not regular of degree equal to the factor count");
    std::vector<SpanningTree> trees;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const EdgeSubset pair = f.factors()[i] | f.factors()[h(i)];
        f.factors()[i].for_each([&](EdgeId e) {
            EdgeSubset path = pair;
            path.erase(e);
            try {
                trees.emplace_back(g, std::move(path));
            } catch (const InvalidArgument&) {
                throw InvalidArgument("F_" + std::to_string(i) + " ∪ F_" + std::to_string(h(i)) +
                                      " minus an edge is not a spanning tree");
            }
        });
    }
    return Uncovering(g, k - 1, std::move(trees), "one_factorisation");
}

Uncovering ubb_wheel(int n) {
    Wheel w = build_wheel(n);
    const auto& r = w.labels.rim;
    const auto& s = w.labels.spokes;
    const Graph& g = w.graph;
    auto set_of = [&](std::initializer_list<std::vector<EdgeId>> parts) {
        EdgeSubset out = g.no_edges();
        for (const auto& p : parts)
            for (EdgeId e : p) out.insert(e);
        return out;
    };
    auto every_other = [n](const std::vector<EdgeId>& ids, int first, int last) {
        std::vector<EdgeId> out;
        for (int i = first; i <= last; i += 2) out.push_back(ids[static_cast<std::size_t>(((i % n) + n) % n)]);
        return out;
    };

    std::vector<EdgeSubset> sets;
    if (n % 2 == 0) {
        auto a = every_other(s, 1, n - 1);
        auto b = every_other(s, 2, n - 2);
        b.push_back(r[0]);
        auto c = every_other(r, 1, n - 1);
        auto d = every_other(r, 2, n - 2);
        d.push_back(s[0]);
        sets = {set_of({a, b}), set_of({a, c}), set_of({a, d}), set_of({b, c}), set_of({b, d}), set_of({c, d})};
    } else {
        const auto a = every_other(s, 1, n - 2);
        const auto b = every_other(s, 2, n - 1);
        const auto c = every_other(r, 1, n - 2);
        const auto d = every_other(r, 2, n - 3);
        const std::vector<EdgeId> r0{r[0]}, rl{r[static_cast<std::size_t>(n - 1)]}, s0{s[0]};
        sets = {set_of({a, b, r0}),     set_of({a, c, rl}),     set_of({a, d, rl, s0}),
                set_of({b, c, s0}),     set_of({b, d, rl, r0}), set_of({c, d, r0, s0})};
    }

    std::vector<SpanningTree> trees;
    for (auto& set : sets) {
        if (!is_spanning_tree(g, set))
            throw InvalidArgument("wheel recipe does not yield spanning trees for n = " + std::to_string(n));
        trees.emplace_back(g, std::move(set));
    }
    return Uncovering(std::move(w.graph), 2, std::move(trees), "wheel");
}

Uncovering ubb_complete(int n) {
    if (n < 3) throw InvalidArgument("complete-graph UBB needs n >= 3");
    const Graph g = build_complete(n);
    if (n % 2 == 1) return ubb_hamdec(g, walecki(g));
    const OneFactorisation f = gk_factorisation(g);
    return ubb_2factor(g, f, hkl_successor_for_k2m(g, f));
}

Uncovering ubb_from_disjoint_trees(const Graph& g, std::vector<SpanningTree> trees, int t) {
    if (t < 0) throw InvalidArgument("t must be non-negative");
    if (trees.size() < static_cast<std::size_t>(t) + 1)
        throw InvalidArgument("need at least t+1 edge-disjoint trees");
    EdgeSubset seen = g.no_edges();
    for (const auto& tree : trees) {
        if (!tree.edges().disjoint(seen)) throw InvalidArgument("trees are not pairwise edge-disjoint");
        seen |= tree.edges();
    }
    return Uncovering(g, t, std::move(trees), "disjoint_trees");
}

EdgeSubset hamdec_blocking_set(const Graph& g, const HamiltonianDecomposition& d, std::size_t cycle, EdgeId e) {
    if (cycle >= d.size() || !d.cycles()[cycle].contains(e)) throw InvalidArgument("edge is not on the given cycle");
    EdgeSubset out = g.no_edges();
    out.insert(e);
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (j == cycle) continue;
        const auto ids = d.cycles()[j].ids();
        out.insert(ids[0]);
        out.insert(ids[1]);
    }
    return out;
}

EdgeSubset two_factor_blocking_set(const Graph& g, const OneFactorisation& f, const SuccessorMap& h, EdgeId e) {
    const std::size_t own = f.factor_of(e);
    EdgeSubset out = g.no_edges();
    out.insert(e);
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (j == own || j == h(own)) continue;
        out.insert(f.factors()[j].ids().front());
    }
    return out;
}

}  // namespace ubb
