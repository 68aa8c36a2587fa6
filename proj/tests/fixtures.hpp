#pragma once

// Shared instances for the construction, verification and simulation tests.

#include <string>
#include <vector>

#include "ubb/construct.hpp"
#include "ubb/decompose.hpp"
#include "ubb/uncovering.hpp"

namespace fixture {

/// Edge-id lists, the format the brute-force oracles take.
inline std::vector<std::vector<int>> tree_lists(const ubb::Uncovering& u) {
    std::vector<std::vector<int>> out;
    for (const auto& t : u.trees()) out.push_back(t.edges().ids());
    return out;
}

/// The 8-vertex 5-regular subgraph of K_8 built from five GK factors, with
/// the 3-cycle F_6 -> F_0 -> F_1 -> F_6 and the swap F_2 <-> F_3.
inline ubb::Uncovering gk8_subgraph_ubb() {
    const ubb::Graph k8 = ubb::build_complete(8);
    const auto f = ubb::gk_factorisation(k8);
    const auto sub = ubb::factor_subgraph(k8, f, {6, 0, 1, 2, 3});
    const auto aux = ubb::auxiliary_digraph(sub.graph, sub.factorisation);
    const ubb::SuccessorMap h(aux, {1, 2, 0, 4, 3});
    return ubb::ubb_2factor(sub.graph, sub.factorisation, h);
}

inline ubb::Uncovering circulant7_ubb() {
    const ubb::Graph g = ubb::build_circulant(7, {1, 2});
    std::vector<ubb::EdgeSubset> cycles(2, g.no_edges());
    for (ubb::EdgeId e = 0; e < static_cast<ubb::EdgeId>(g.edge_count()); ++e) {
        const auto& ed = g.edge(e);
        const int d = std::min(ed.v - ed.u, 7 - (ed.v - ed.u));
        cycles[static_cast<std::size_t>(d - 1)].insert(e);
    }
    return ubb::ubb_hamdec(g, ubb::HamiltonianDecomposition(g, cycles));
}

struct Named {
    std::string name;
    ubb::Uncovering ubb;
};

/// Every construction on small instances.
inline std::vector<Named> all_small() {
    std::vector<Named> out;
    for (int m = 2; m <= 3; ++m)
        for (int n = m; n <= 4; ++n)
            out.push_back({"K" + std::to_string(m) + "," + std::to_string(n), ubb::ubb_complete_bipartite(m, n)});
    out.push_back({"C7(1,2)", circulant7_ubb()});
    for (int n = 3; n <= 7; ++n) out.push_back({"K" + std::to_string(n), ubb::ubb_complete(n)});
    for (int n = 3; n <= 7; ++n) out.push_back({"W" + std::to_string(n), ubb::ubb_wheel(n)});
    out.push_back({"GK8-sub", gk8_subgraph_ubb()});
    return out;
}

}  // namespace fixture
