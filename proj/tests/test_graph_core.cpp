#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "ubb/connectivity.hpp"
#include "ubb/error.hpp"
#include "ubb/graph_io.hpp"
#include "ubb/spanning_tree.hpp"

using namespace ubb;

namespace {

EdgeSubset ids(const Graph& g, std::initializer_list<EdgeId> list) { return EdgeSubset(g.edge_count(), list); }

std::vector<Graph> small_fixtures() {
    std::vector<Graph> out;
    for (int n = 2; n <= 8; ++n) out.push_back(build_complete(n));
    for (int m = 2; m <= 4; ++m)
        for (int n = m; n <= 8 - m; ++n) out.push_back(build_complete_bipartite(m, n));
    for (int n = 3; n <= 7; ++n) out.push_back(build_wheel(n).graph);
    for (int n = 3; n <= 8; ++n) out.push_back(build_cycle(n));
    out.push_back(build_circulant(7, {1, 2}));
    out.push_back(build_circulant(8, {1, 3}));
    out.push_back(build_circulant(8, {2, 4}));
    out.push_back(build_circulant(6, {3}));
    return out;
}

}  // namespace

TEST_CASE("edge subsets") {
    EdgeSubset a(130, {0, 64, 129});
    EdgeSubset b(130, {64, 100});
    CHECK(a.size() == 3);
    CHECK((a & b).ids() == std::vector<EdgeId>{64});
    CHECK((a | b).size() == 4);
    CHECK((a - b).ids() == std::vector<EdgeId>{0, 129});
    CHECK(a.complement().size() == 127);
    CHECK_FALSE(a.disjoint(b));
    CHECK((a - b).disjoint(b));
    CHECK(EdgeSubset::full(130).size() == 130);
    CHECK_THROWS_AS(a.insert(130), InvalidArgument);
    CHECK_THROWS_AS(a &= EdgeSubset(129), InvalidArgument);
}

TEST_CASE("graph invariants") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidArgument);
    const Graph g(3, {{2, 0}, {1, 2}});
    CHECK(g.edge(0) == Edge{0, 2});
    CHECK(g.edge_id(2, 1) == 1);
    CHECK_FALSE(g.find_edge(0, 1));
}

TEST_CASE("complete graphs") {
    CHECK(build_complete(2).edge_count() == 1);
    const Graph k4 = build_complete(4);
    CHECK(k4.edge_count() == 6);
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
    CHECK(build_complete(8).edge_count() == 28);
    CHECK(k4.edge(0) == Edge{0, 1});
    CHECK(k4.edge(5) == Edge{2, 3});
    CHECK_THROWS_AS(build_complete(1), InvalidArgument);
}

TEST_CASE("complete bipartite graphs") {
    const Graph c4 = build_complete_bipartite(2, 2);
    CHECK(c4.edge_count() == 4);
    CHECK(is_hamilton_cycle(c4, c4.all_edges()));
    const Graph k33 = build_complete_bipartite(3, 3);
    CHECK(k33.edge_count() == 9);
    for (int v = 0; v < 6; ++v) CHECK(k33.degree(v) == 3);
    CHECK(build_complete_bipartite(3, 4).edge_count() == 12);
    CHECK_THROWS_AS(build_complete_bipartite(1, 3), InvalidArgument);
    CHECK_THROWS_AS(build_complete_bipartite(4, 3), InvalidArgument);
}

TEST_CASE("wheels") {
    const Wheel w3 = build_wheel(3);
    CHECK(w3.graph.edge_count() == 6);
    CHECK(w3.graph.same_edge_set(build_complete(4)));
    const Wheel w7 = build_wheel(7);
    CHECK(w7.graph.vertex_count() == 8);
    CHECK(w7.graph.edge_count() == 14);
    const Wheel w4 = build_wheel(4);
    CHECK(w4.graph.degree(w4.labels.hub) == 4);
    for (int i = 0; i < 4; ++i) CHECK(w4.graph.degree(i) == 3);
    for (int i = 0; i < 7; ++i) {
        CHECK(w7.graph.edge(w7.labels.rim[static_cast<std::size_t>(i)]) == Edge{std::min(i, (i + 1) % 7), std::max(i, (i + 1) % 7)});
        CHECK(w7.graph.edge(w7.labels.spokes[static_cast<std::size_t>(i)]) == Edge{i, 7});
    }
    CHECK(w7.graph.labels().back() == "v_inf");
    CHECK_THROWS_AS(build_wheel(2), InvalidArgument);
}

TEST_CASE("circulants") {
    const Graph c7 = build_circulant(7, {1, 2});
    CHECK(c7.edge_count() == 14);
    for (int v = 0; v < 7; ++v) CHECK(c7.degree(v) == 4);
    CHECK(build_circulant(5, {1}).same_edge_set(build_cycle(5)));
    const Graph m6 = build_circulant(6, {3});
    CHECK(m6.edge_count() == 3);
    CHECK_FALSE(is_connected(m6));
    CHECK_THROWS_AS(build_circulant(7, {4}), InvalidArgument);
    CHECK_THROWS_AS(build_circulant(7, {1, 1}), InvalidArgument);
    CHECK_THROWS_AS(build_circulant(7, {0}), InvalidArgument);
}

TEST_CASE("is_connected") {
    const Graph c5 = build_cycle(5);
    CHECK(is_connected(c5, ids(c5, {2})));
    CHECK_FALSE(is_connected(c5, ids(c5, {0, 2})));
    const Graph k4 = build_complete(4);
    oracle::for_each_subset(6, 2, [&](const std::vector<int>& pair) {
        CHECK(is_connected(k4, ids(k4, {pair[0], pair[1]})));
    });
    CHECK(is_connected(Graph(1, {})));
    CHECK(is_connected(Graph(0, {})));
}

TEST_CASE("is_spanning_tree") {
    const Graph c5 = build_cycle(5);
    CHECK(is_spanning_tree(c5, c5.all_edges() - ids(c5, {3})));
    const Graph k4 = build_complete(4);
    // triangle on 0,1,2: edges 01, 02, 12
    CHECK_FALSE(is_spanning_tree(k4, ids(k4, {0, 1, 3})));
    const Wheel w6 = build_wheel(6);
    EdgeSubset ab(w6.graph.edge_count());
    for (int i = 1; i < 6; ++i) ab.insert(w6.labels.spokes[static_cast<std::size_t>(i)]);
    ab.insert(w6.labels.rim[0]);
    CHECK(is_spanning_tree(w6.graph, ab));
}

TEST_CASE("edge connectivity matches the bipartition oracle") {
    for (const Graph& g : small_fixtures()) {
        if (!is_connected(g)) {
            CHECK(edge_connectivity(g) == 0);
            continue;
        }
        CAPTURE(to_graph6(g));
        CHECK(edge_connectivity(g) == oracle::bipartition_min_cut(g));
    }
    CHECK(edge_connectivity(build_complete_bipartite(3, 4)) == 3);
    CHECK(edge_connectivity(build_wheel(9).graph) == 3);
    CHECK(edge_connectivity(build_circulant(7, {1, 2})) == 4);
}

TEST_CASE("min_edge_cut is a minimum cut and minimal") {
    for (const Graph& g : small_fixtures()) {
        if (!is_connected(g)) {
            CHECK_THROWS_AS(min_edge_cut(g), InvalidArgument);
            continue;
        }
        const EdgeSubset cut = min_edge_cut(g);
        CAPTURE(to_graph6(g));
        REQUIRE(static_cast<int>(cut.size()) == edge_connectivity(g));
        CHECK_FALSE(is_connected(g, cut));
        if (cut.size() <= 4) {
            const auto members = cut.ids();
            for (int k = 0; k < static_cast<int>(members.size()); ++k) {
                oracle::for_each_subset(static_cast<int>(members.size()), k, [&](const std::vector<int>& pick) {
                    EdgeSubset part(g.edge_count());
                    for (int i : pick) part.insert(members[static_cast<std::size_t>(i)]);
                    CHECK(is_connected(g, part));
                });
            }
        }
    }
}

TEST_CASE("minimum cuts of W_4 and K_4 are vertex stars") {
    auto star_of = [](const Graph& g, VertexId v) {
        EdgeSubset s(g.edge_count());
        for (const auto& inc : g.incident(v)) s.insert(inc.edge);
        return s;
    };
    const Wheel w4 = build_wheel(4);
    std::set<std::vector<EdgeId>> stars;
    for (int v = 0; v < 4; ++v) stars.insert(star_of(w4.graph, v).ids());
    // Brute force: every disconnecting 3-set of W_4 is a rim-vertex star.
    oracle::for_each_subset(8, 3, [&](const std::vector<int>& s) {
        const EdgeSubset cut(8, std::vector<EdgeId>(s.begin(), s.end()));
        if (!is_connected(w4.graph, cut)) CHECK(stars.count(cut.ids()) == 1);
    });
    CHECK(stars.count(min_edge_cut(w4.graph).ids()) == 1);

    const Graph k4 = build_complete(4);
    const auto cut = min_edge_cut(k4);
    bool is_star = false;
    for (int v = 0; v < 4; ++v) is_star = is_star || cut == star_of(k4, v);
    CHECK(is_star);
    CHECK(min_edge_cut(build_cycle(4)).size() == 2);
}

TEST_CASE("hamilton cycles") {
    const Graph c7 = build_circulant(7, {1, 2});
    EdgeSubset step1(c7.edge_count());
    for (int i = 0; i < 7; ++i) step1.insert(c7.edge_id(i, (i + 1) % 7));
    CHECK(is_hamilton_cycle(c7, step1));
    CHECK_FALSE(is_hamilton_cycle(c7, step1 - EdgeSubset(14, {0})));
    // two disjoint triangles are 2-regular but not connected
    const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(is_hamilton_cycle(two_triangles, two_triangles.all_edges()));
    const Graph k4 = build_complete(4);
    CHECK_FALSE(is_hamilton_cycle(k4, ids(k4, {0, 5})));  // a perfect matching
}

TEST_CASE("count_spanning_trees") {
    CHECK(count_spanning_trees(build_complete(4)) == 16);
    CHECK(count_spanning_trees(build_cycle(5)) == 5);
    CHECK(oracle::count_trees_by_subsets(build_wheel(4).graph) == 45);
    CHECK(count_spanning_trees(build_wheel(4).graph) == 45);
    CHECK(count_spanning_trees(build_complete_bipartite(3, 3)) == 81);
    CHECK(count_spanning_trees(build_circulant(6, {3})) == 0);
    // Cayley's formula well past 64 bits
    BigInt cayley = 1;
    for (int i = 0; i < 28; ++i) cayley *= 30;
    CHECK(count_spanning_trees(build_complete(30)) == cayley);
}

TEST_CASE("enumerate_spanning_trees agrees with Matrix-Tree") {
    CHECK(enumerate_spanning_trees(build_cycle(4), 10).size() == 4);
    CHECK(enumerate_spanning_trees(build_complete(4), 100).size() == 16);
    CHECK(enumerate_spanning_trees(build_complete_bipartite(3, 3), 100).size() == 81);
    for (const Graph& g : small_fixtures()) {
        if (!is_connected(g) || g.vertex_count() > 6) continue;
        const auto trees = enumerate_spanning_trees(g, 100'000);
        CHECK(BigInt(trees.size()) == count_spanning_trees(g));
        std::set<std::vector<EdgeId>> distinct;
        for (const auto& t : trees) {
            CHECK(is_spanning_tree(g, t.edges()));
            distinct.insert(t.edges().ids());
        }
        CHECK(distinct.size() == trees.size());
    }
    CHECK_THROWS_AS(enumerate_spanning_trees(build_complete(4), 15), ResourceLimit);
    CHECK_THROWS_AS(enumerate_spanning_trees(build_circulant(6, {3}), 10), InvalidArgument);
}

TEST_CASE("graph6 matches reference encodings") {
    CHECK(to_graph6(build_complete(4)) == "C~");
    CHECK(to_graph6(build_cycle(5)) == "Dhc");
    CHECK(to_graph6(Graph(2, {{0, 1}})) == "A_");
    const Graph petersen = parse_graph6("IheA@GUAo");
    CHECK(petersen.vertex_count() == 10);
    CHECK(petersen.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);
    CHECK(to_graph6(petersen) == "IheA@GUAo");
    // 70 vertices uses the long size prefix
    const std::string k70 = to_graph6(build_complete(70));
    CHECK(k70.substr(0, 4) == "~?@E");
    CHECK(parse_graph6(k70).edge_count() == 70 * 69 / 2);
    CHECK(parse_graph6(">>graph6<<C~").edge_count() == 6);
}

TEST_CASE("graph6 round trip on fixtures") {
    for (const Graph& g : small_fixtures()) {
        const Graph back = parse_graph6(to_graph6(g));
        CHECK(back.same_edge_set(g));
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);       // body missing
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);     // body too long
    CHECK_THROWS_AS(parse_graph6("A`"), ParseError);      // nonzero padding
    CHECK_THROWS_AS(parse_graph6("C\x7f"), ParseError);   // byte outside 63..126
    std::istringstream in("C~\n\nDhc\nC\n");
    try {
        read_graph6_stream(in);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("graph JSON round trip") {
    const Graph c7 = build_circulant(7, {1, 2});
    const Graph back = graph_from_json(graph_to_json(c7));
    CHECK(back == c7);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"n", 3}, {"edges", {{0, 0}}}}), ParseError);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"edges", nlohmann::json::array()}}), ParseError);
}

TEST_CASE("checked-in catalog holds the connected graphs on at most five vertices") {
    std::ifstream in(UBB_TEST_DATA "/connected_le5.g6");
    REQUIRE(in);
    const auto graphs = read_graph6_stream(in);
    CHECK(graphs.size() == 31);
    std::vector<int> per_order(6, 0);
    for (const auto& g : graphs) {
        CHECK(is_connected(g));
        ++per_order[static_cast<std::size_t>(g.vertex_count())];
    }
    CHECK(per_order == std::vector<int>{0, 1, 1, 2, 6, 21});
}
