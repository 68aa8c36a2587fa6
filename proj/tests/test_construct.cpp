#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ubb/connectivity.hpp"
#include "ubb/error.hpp"
#include "ubb/verify.hpp"

using namespace ubb;

namespace {

std::size_t trees_avoiding(const Uncovering& u, const EdgeSubset& failures) {
    std::size_t count = 0;
    for (const auto& t : u.trees())
        if (t.edges().disjoint(failures)) ++count;
    return count;
}

bool is_hamilton_path(const Graph& g, const EdgeSubset& tree) {
    const auto deg = degrees_in(g, tree);
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; });
}

}  // namespace

TEST_CASE("complete bipartite family sizes") {
    for (int m = 2; m <= 5; ++m)
        for (int n = m; n <= 5; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            const auto u = ubb_complete_bipartite(m, n);
            CHECK(u.size() == static_cast<std::size_t>(m * m));
            CHECK(u.t() == m - 1);
            CHECK(u.graph().edge_count() == static_cast<std::size_t>(m * n));
            CHECK(verify_ubb(u).status == VerdictStatus::valid);
        }
    CHECK_THROWS_AS(ubb_complete_bipartite(3, 2), InvalidArgument);
}

TEST_CASE("every construction agrees with the brute-force uncovering check") {
    for (const auto& [name, u] : fixture::all_small()) {
        CAPTURE(name);
        const int m = static_cast<int>(u.graph().edge_count());
        CHECK(oracle::is_uncovering(m, fixture::tree_lists(u), u.t()));
        CHECK(u.t() < oracle::bipartition_min_cut(u.graph()));
        CHECK(verify_ubb(u).status == VerdictStatus::valid);
    }
}

TEST_CASE("Hamilton-cycle construction") {
    const auto u = fixture::circulant7_ubb();
    CHECK(u.size() == 14);
    CHECK(u.t() == 3);
    for (const auto& t : u.trees()) CHECK(is_hamilton_path(u.graph(), t.edges()));
    for (int n = 3; n <= 9; n += 2) {
        const auto k = ubb_complete(n);
        CHECK(k.size() == static_cast<std::size_t>(n * (n - 1) / 2));
        CHECK(k.t() == n - 2);
        for (const auto& t : k.trees()) CHECK(is_hamilton_path(k.graph(), t.edges()));
    }
}

TEST_CASE("2-factor construction on even complete graphs") {
    for (int n = 4; n <= 8; n += 2) {
        const auto u = ubb_complete(n);
        CHECK(u.size() == u.graph().edge_count());
        CHECK(u.t() == n - 2);
        CHECK(edge_connectivity(u.graph()) == n - 1);
        for (const auto& t : u.trees()) CHECK(is_hamilton_path(u.graph(), t.edges()));
    }
    const auto ex = fixture::gk8_subgraph_ubb();
    CHECK(ex.size() == 20);
    CHECK(ex.t() == 4);
    CHECK(ex.graph().edge_count() == 20);
}

TEST_CASE("2-factor construction rejects bad input") {
    const Graph k6 = build_complete(6);
    const auto f = gk_factorisation(k6);
    const auto aux = auxiliary_digraph(k6, f);
    // A non-Hamiltonian pair cannot even form a successor map.
    CHECK_THROWS_AS(SuccessorMap(aux, {0, 1, 2, 3, 4}), InvalidArgument);
    const Graph k4 = build_complete(4);
    CHECK_THROWS_AS(ubb_2factor(k6, gk_factorisation(k4), hkl_successor_for_k2m(k4, gk_factorisation(k4))),
                    InvalidArgument);
}

TEST_CASE("wheel construction") {
    for (int n = 3; n <= 12; ++n) {
        CAPTURE(n);
        const auto u = ubb_wheel(n);
        CHECK(u.size() == 6);
        CHECK(u.t() == 2);
        CHECK(u.graph().edge_count() == static_cast<std::size_t>(2 * n));
        CHECK(verify_ubb(u).status == VerdictStatus::valid);
    }
    CHECK_THROWS_AS(ubb_wheel(2), InvalidArgument);
}

TEST_CASE("blocking sets are avoided by exactly one tree") {
    const auto u = fixture::circulant7_ubb();
    const Graph& g = u.graph();
    std::vector<EdgeSubset> cycles(2, g.no_edges());
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
        const auto& ed = g.edge(e);
        cycles[static_cast<std::size_t>(std::min(ed.v - ed.u, 7 - (ed.v - ed.u)) - 1)].insert(e);
    }
    const HamiltonianDecomposition d(g, cycles);
    for (std::size_t c = 0; c < 2; ++c)
        for (EdgeId e : cycles[c].ids()) {
            const auto block = hamdec_blocking_set(g, d, c, e);
            CHECK(block.size() == 3);
            CHECK(trees_avoiding(u, block) == 1);
            CHECK(block.disjoint(cycles[c] - EdgeSubset(g.edge_count(), {e})));
        }

    const Graph k8 = build_complete(8);
    const auto f = gk_factorisation(k8);
    const auto h = hkl_successor_for_k2m(k8, f);
    const auto k8u = ubb_2factor(k8, f, h);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (EdgeId e : f.factors()[i].ids()) {
            const auto block = two_factor_blocking_set(k8, f, h, e);
            CHECK(block.size() == 6);
            CHECK(trees_avoiding(k8u, block) == 1);
        }
}

TEST_CASE("disjoint spanning trees") {
    const auto k4 = build_complete(4);
    const SpanningTree a(k4, EdgeSubset(6, {k4.edge_id(0, 1), k4.edge_id(1, 2), k4.edge_id(2, 3)}));
    const SpanningTree b(k4, EdgeSubset(6, {k4.edge_id(0, 2), k4.edge_id(0, 3), k4.edge_id(1, 3)}));
    const auto u = ubb_from_disjoint_trees(k4, {a, b}, 1);
    CHECK(u.size() == 2);
    CHECK(verify_ubb(u).status == VerdictStatus::valid);
    CHECK_THROWS_AS(ubb_from_disjoint_trees(k4, {a, b}, 2), InvalidArgument);
    CHECK_THROWS_AS(ubb_from_disjoint_trees(k4, {a, a}, 1), InvalidArgument);
    CHECK_THROWS_AS(ubb_from_disjoint_trees(k4, {a}, -1), InvalidArgument);
}

TEST_CASE("uncovering JSON round trip") {
    for (const auto& [name, u] : fixture::all_small()) {
        CAPTURE(name);
        const auto back = Uncovering::from_json(u.to_json());
        CHECK(back.t() == u.t());
        CHECK(back.size() == u.size());
        CHECK(back.graph().same_edge_set(u.graph()));
        for (std::size_t i = 0; i < u.size(); ++i) CHECK(back.trees()[i] == u.trees()[i]);
        CHECK(back.provenance() == u.provenance());
    }
}
