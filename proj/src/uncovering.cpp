#include "ubb/uncovering.hpp"

#include <string>

#include "ubb/error.hpp"
#include "ubb/graph_io.hpp"

namespace ubb {

Uncovering::Uncovering(Graph graph, int t, std::vector<SpanningTree> trees, std::string provenance)
    : graph_(std::move(graph)), t_(t), trees_(std::move(trees)), provenance_(std::move(provenance)) {
    if (t_ < 0) throw InvalidArgument("t must be non-negative");
    for (const auto& tree : trees_)
        if (tree.edges().universe() != graph_.edge_count())
            throw InvalidArgument("tree refers to a different edge universe");
}

Uncovering Uncovering::without(std::size_t index) const {
    if (index >= trees_.size()) throw InvalidArgument("tree index out of range");
    auto trees = trees_;
    trees.erase(trees.begin() + static_cast<std::ptrdiff_t>(index));
    return Uncovering(graph_, t_, std::move(trees), provenance_);
}

Uncovering Uncovering::with(SpanningTree tree) const {
    auto trees = trees_;
    trees.push_back(std::move(tree));
    return Uncovering(graph_, t_, std::move(trees), provenance_);
}

Uncovering Uncovering::with_t(int t) const { return Uncovering(graph_, t, trees_, provenance_); }

Uncovering Uncovering::remap_to(const Graph& other) const {
    if (!graph_.same_edge_set(other)) throw InvalidArgument("graphs have different edge sets");
    std::vector<SpanningTree> trees;
    trees.reserve(trees_.size());
    for (const auto& tree : trees_) {
        EdgeSubset mapped = other.no_edges();
        tree.edges().for_each([&](EdgeId e) { mapped.insert(other.edge_id(graph_.edge(e).u, graph_.edge(e).v)); });
        trees.emplace_back(other, std::move(mapped));
    }
    return Uncovering(other, t_, std::move(trees), provenance_);
}

nlohmann::json Uncovering::to_json() const {
    nlohmann::json j = graph_to_json(graph_);
    j["t"] = t_;
    nlohmann::json trees = nlohmann::json::array();
    for (const auto& tree : trees_) trees.push_back(tree.edges().ids());
    j["trees"] = std::move(trees);
    j["provenance"] = provenance_;
    return j;
}

Uncovering Uncovering::from_json(const nlohmann::json& j) {
    Graph g = graph_from_json(j);
    try {
        std::vector<SpanningTree> trees;
        for (const auto& ids : j.at("trees")) {
            EdgeSubset s = g.no_edges();
            for (const auto& e : ids) s.insert(e.get<EdgeId>());
            trees.emplace_back(g, std::move(s));
        }
        return Uncovering(g, j.at("t").get<int>(), std::move(trees), j.value("provenance", std::string{}));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad uncovering JSON: ") + e.what());
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("bad uncovering JSON: ") + e.what());
    }
}

}  // namespace ubb
