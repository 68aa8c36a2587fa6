#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "ubb/graph.hpp"
#include "ubb/spanning_tree.hpp"

namespace ubb {

/// A family of spanning trees of one graph together with the number of edge
/// failures `t` it claims to survive. Whether the claim holds is decided by
/// verify_ubb, not by construction.
class Uncovering {
public:
    Uncovering(Graph graph, int t, std::vector<SpanningTree> trees, std::string provenance);

    const Graph& graph() const noexcept { return graph_; }
    int t() const noexcept { return t_; }
    const std::vector<SpanningTree>& trees() const noexcept { return trees_; }
    std::size_t size() const noexcept { return trees_.size(); }
    const std::string& provenance() const noexcept { return provenance_; }

    /// Copy with tree `index` removed.
    Uncovering without(std::size_t index) const;
    /// Copy with an extra tree appended.
    Uncovering with(SpanningTree tree) const;
    /// Copy claiming a different t.
    Uncovering with_t(int t) const;
    /// Same trees re-expressed against `other`, which must have the same edge
    /// set (possibly in a different order).
    Uncovering remap_to(const Graph& other) const;

    /// {"n", "edges", "t", "trees", "provenance"}
    nlohmann::json to_json() const;
    static Uncovering from_json(const nlohmann::json& j);

private:
    Graph graph_;
    int t_;
    std::vector<SpanningTree> trees_;
    std::string provenance_;
};

}  // namespace ubb
