#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ubb/combinatorics.hpp"
#include "ubb/connectivity.hpp"
#include "ubb/error.hpp"
#include "ubb/spanning_tree.hpp"
#include "ubb/uncover_kernel.hpp"
#include "ubb/verify.hpp"

using namespace ubb;

namespace {

// Nested-ceiling bound from the complement side: blocks of size n-k covering
// every t-set, rounded up one layer at a time from the inside.
std::uint64_t schonheim_oracle(int n, int k, int t) {
    const int b = n - k;
    std::uint64_t value = 1;
    for (int i = t - 1; i >= 0; --i) {
        const std::uint64_t num = static_cast<std::uint64_t>(n - i) * value;
        const auto den = static_cast<std::uint64_t>(b - i);
        value = (num + den - 1) / den;
    }
    return value;
}

bool meets_every_tree(const Uncovering& u, const EdgeSubset& s) {
    for (const auto& t : u.trees())
        if (t.edges().disjoint(s)) return false;
    return true;
}

}  // namespace

TEST_CASE("serial and parallel kernels agree on random families") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t edges = 4 + rng() % 11;
        const int t = 1 + static_cast<int>(rng() % 4);
        if (static_cast<std::size_t>(t) > edges) continue;
        const std::size_t count = 1 + rng() % 12;
        const int density = 10 + static_cast<int>(rng() % 60);
        std::vector<EdgeSubset> trees;
        for (std::size_t i = 0; i < count; ++i) {
            EdgeSubset s(edges);
            for (std::size_t e = 0; e < edges; ++e)
                if (static_cast<int>(rng() % 100) < density) s.insert(static_cast<EdgeId>(e));
            trees.push_back(s);
        }
        const auto serial = find_uncovered_serial(trees, edges, t);
        for (int threads : {1, 2, 4}) {
            const auto par = find_uncovered_parallel(trees, edges, t, threads);
            CHECK(par.witness == serial.witness);
            CHECK(par.checked == serial.checked);
        }
        if (serial.witness) {
            CHECK(serial.checked == colex_rank(*serial.witness) + 1);
        } else {
            CHECK(serial.checked == binomial(edges, static_cast<std::uint64_t>(t)));
        }
    }
}

TEST_CASE("kernels agree on every construction after dropping a tree") {
    for (const auto& [name, u] : fixture::all_small()) {
        CAPTURE(name);
        for (std::size_t drop = 0; drop < u.size(); drop += 3) {
            const auto smaller = u.without(drop);
            VerifyOptions serial;
            serial.serial = true;
            const auto a = verify_ubb(smaller, serial);
            const auto b = verify_ubb(smaller);
            CHECK(a.status == b.status);
            CHECK(a.witness == b.witness);
            CHECK(a.subsets_checked == b.subsets_checked);
        }
    }
}

TEST_CASE("circulant verification and its witness after a removal") {
    const auto u = fixture::circulant7_ubb();
    const auto v = verify_ubb(u);
    CHECK(v.status == VerdictStatus::valid);
    CHECK(v.subsets_checked == 364);
    CHECK(v.lambda == 4);

    const Graph& g = u.graph();
    for (std::size_t drop = 0; drop < u.size(); ++drop) {
        const auto bad = verify_ubb(u.without(drop));
        REQUIRE(bad.status == VerdictStatus::invalid);
        REQUIRE(bad.witness);
        const EdgeSubset& w = *bad.witness;
        CHECK(w.size() == 3);
        CHECK(w.disjoint(u.trees()[drop].edges()));
        CHECK(meets_every_tree(u.without(drop), w));
        const auto step = [&](EdgeId e) {
            const auto& ed = g.edge(e);
            return std::min(ed.v - ed.u, 7 - (ed.v - ed.u));
        };
        // one edge from the dropped path's own cycle, two from the other
        const int own = step(u.trees()[drop].edges().ids().front());
        int same = 0;
        for (EdgeId e : w.ids())
            if (step(e) == own) ++same;
        CHECK(same == 1);
    }
}

TEST_CASE("witness soundness and monotonicity") {
    for (const auto& [name, u] : fixture::all_small()) {
        CAPTURE(name);
        for (int t = 1; t <= u.t(); ++t) CHECK(verify_ubb(u.with_t(t)).status == VerdictStatus::valid);
        const auto thin = u.without(0).without(0);
        for (int t = 1; t <= u.t(); ++t) {
            const auto v = verify_ubb(thin.with_t(t));
            if (v.status == VerdictStatus::invalid) {
                REQUIRE(v.witness);
                CHECK(v.witness->size() == static_cast<std::size_t>(t));
                CHECK(meets_every_tree(thin, *v.witness));
                for (int t2 = t + 1; t2 <= u.t(); ++t2)
                    CHECK(verify_ubb(thin.with_t(t2)).status == VerdictStatus::invalid);
                break;
            }
        }
    }
}

TEST_CASE("precondition violation and ceiling") {
    const auto u = ubb_wheel(5);
    const auto v = verify_ubb(u.with_t(3));
    CHECK(v.status == VerdictStatus::precondition_violation);
    CHECK(v.lambda == 3);
    CHECK_FALSE(v.ok());
    CHECK(to_string(v.status) == "precondition-violation");

    VerifyOptions small;
    small.ceiling = 100;
    CHECK_THROWS_AS(verify_ubb(ubb_complete(7), small), ResourceLimit);
}

TEST_CASE("sampled mode") {
    VerifyOptions opts;
    opts.mode = VerifyOptions::Mode::sampled;
    opts.samples = 20'000;
    opts.seed = 99;
    for (const auto& [name, u] : fixture::all_small()) {
        CAPTURE(name);
        const auto v = verify_ubb(u, opts);
        CHECK(v.status == VerdictStatus::sampled_pass);
        CHECK(v.subsets_checked == 20'000);
    }
    const auto broken = fixture::circulant7_ubb().without(3);
    const auto a = verify_ubb(broken, opts);
    const auto b = verify_ubb(broken, opts);
    opts.threads = 1;
    const auto c = verify_ubb(broken, opts);
    CHECK(a.status == VerdictStatus::invalid);
    CHECK(a.witness == b.witness);
    CHECK(a.witness == c.witness);
    CHECK(meets_every_tree(broken, *a.witness));
    CHECK(a.to_json().dump() == b.to_json().dump());
}

TEST_CASE("Schonheim bound") {
    CHECK(schonheim_bound(20, 7, 4) == 11);
    CHECK(schonheim_bound(9, 5, 2) == 7);
    for (int n = 2; n <= 20; ++n) CHECK(schonheim_bound(2 * n, n, 2) == 6);
    for (int n = 2; n <= 24; ++n)
        for (int k = 1; k < n; ++k)
            for (int t = 1; t <= n - k; ++t) {
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(t);
                CHECK(schonheim_bound(n, k, t) == schonheim_oracle(n, k, t));
            }
    CHECK_THROWS_AS(schonheim_bound(5, 5, 1), InvalidArgument);
    CHECK_THROWS_AS(schonheim_bound(5, 2, 4), InvalidArgument);
}

TEST_CASE("constructions respect the Schonheim bound") {
    for (const auto& [name, u] : fixture::all_small()) {
        CAPTURE(name);
        const int m = static_cast<int>(u.graph().edge_count());
        const int k = u.graph().vertex_count() - 1;
        if (m > k) CHECK(u.size() >= schonheim_bound(m, k, u.t()));
    }
}

TEST_CASE("covering design duality") {
    const auto w7 = ubb_wheel(7);
    const auto blocks = export_covering_design(w7);
    CHECK(blocks.size() == 6);
    for (const auto& b : blocks) CHECK(b.size() == 7);
    CHECK(verify_covering(14, blocks, 2));

    const auto ex = fixture::gk8_subgraph_ubb();
    const auto exb = export_covering_design(ex);
    for (const auto& b : exb) CHECK(b.size() == 13);
    CHECK(verify_covering(20, exb, 4));
    CHECK_FALSE(verify_covering(20, export_covering_design(ex.without(0)), 4));

    CHECK_FALSE(verify_covering(4, std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 3}}, 2));
    CHECK(verify_covering(4, std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 3}, {0, 3}}, 2));
    CHECK_THROWS_AS(verify_covering(4, std::vector<std::vector<int>>{{0, 7}}, 1), InvalidArgument);
}

TEST_CASE("minimality") {
    CHECK(is_minimal_ubb(fixture::circulant7_ubb()).minimal);
    CHECK(is_minimal_ubb(ubb_complete_bipartite(3, 3)).minimal);
    CHECK(is_minimal_ubb(ubb_complete(6)).minimal);

    const auto w = ubb_wheel(5);
    const auto trees = enumerate_spanning_trees(w.graph(), 1000);
    const auto extra = std::find_if(trees.begin(), trees.end(), [&](const SpanningTree& t) {
        return std::find(w.trees().begin(), w.trees().end(), t) == w.trees().end();
    });
    REQUIRE(extra != trees.end());
    const auto report = is_minimal_ubb(w.with(*extra));
    CHECK_FALSE(report.minimal);
    CHECK_FALSE(report.witnesses.back().has_value());
    for (std::size_t i = 0; i < report.witnesses.size(); ++i)
        if (report.witnesses[i]) CHECK(meets_every_tree(w.with(*extra).without(i), *report.witnesses[i]));

    CHECK_THROWS_AS(is_minimal_ubb(w.without(0)), InvalidArgument);
}
