#include "ubb/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ubb/error.hpp"

namespace ubb {

Graph::Graph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges, std::vector<std::string> labels)
    : n_(vertex_count), adj_(vertex_count < 0 ? 0 : static_cast<std::size_t>(vertex_count)), labels_(std::move(labels)) {
    if (vertex_count < 0) throw InvalidArgument("negative vertex count");
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n_))
        throw InvalidArgument("label count does not match vertex count");
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n_ || b >= n_)
            throw InvalidArgument("edge {" + std::to_string(a) + "," + std::to_string(b) + "} has an endpoint out of range");
        if (a == b) throw InvalidArgument("self-loop at vertex " + std::to_string(a));
        const Edge e{std::min(a, b), std::max(a, b)};
        if (find_edge(e.u, e.v))
            throw InvalidArgument("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        const auto id = static_cast<EdgeId>(edges_.size());
        edges_.push_back(e);
        adj_[static_cast<std::size_t>(e.u)].push_back({e.v, id});
        adj_[static_cast<std::size_t>(e.v)].push_back({e.u, id});
    }
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
    const auto& lu = adj_[static_cast<std::size_t>(u)];
    const auto& lv = adj_[static_cast<std::size_t>(v)];
    const auto& shorter = lu.size() <= lv.size() ? lu : lv;
    const VertexId target = lu.size() <= lv.size() ? v : u;
    for (const auto& inc : shorter)
        if (inc.neighbour == target) return inc.edge;
    return std::nullopt;
}

EdgeId Graph::edge_id(VertexId u, VertexId v) const {
    if (auto e = find_edge(u, v)) return *e;
    throw InvalidArgument("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
}

bool Graph::same_edge_set(const Graph& other) const {
    if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
    return std::all_of(edges_.begin(), edges_.end(),
                       [&](const Edge& e) { return other.find_edge(e.u, e.v).has_value(); });
}

Graph Graph::edge_subgraph(const EdgeSubset& keep) const {
    std::vector<std::pair<VertexId, VertexId>> kept;
    keep.for_each([&](EdgeId e) { kept.emplace_back(edge(e).u, edge(e).v); });
    return Graph(n_, std::move(kept), labels_);
}

Graph build_complete(int n) {
    if (n < 2) throw InvalidArgument("complete graph needs n >= 2");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph build_complete_bipartite(int m, int n) {
    if (m < 2 || m > n) throw InvalidArgument("complete bipartite graph needs 2 <= m <= n");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < n; ++y) edges.emplace_back(x, m + y);
    return Graph(m + n, std::move(edges));
}

Wheel build_wheel(int n) {
    if (n < 3) throw InvalidArgument("wheel needs n >= 3");
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        labels.push_back("v" + std::to_string(i));
    }
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n);
    labels.emplace_back("v_inf");
    WheelLabels wl;
    wl.hub = n;
    for (int i = 0; i < n; ++i) {
        wl.rim.push_back(i);
        wl.spokes.push_back(n + i);
    }
    return {Graph(n + 1, std::move(edges), std::move(labels)), std::move(wl)};
}

Graph build_circulant(int n, const std::vector<int>& steps) {
    if (n < 2) throw InvalidArgument("circulant needs n >= 2");
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<int> seen;
    for (int s : steps) {
        if (s < 1 || 2 * s > n) throw InvalidArgument("circulant step " + std::to_string(s) + " outside 1..n/2");
        if (std::find(seen.begin(), seen.end(), s) != seen.end())
            throw InvalidArgument("repeated circulant step " + std::to_string(s));
        seen.push_back(s);
        // For s == n/2 each edge {i, i+s} appears twice around the circle.
        const int count = 2 * s == n ? n / 2 : n;
        for (int i = 0; i < count; ++i) edges.emplace_back(i, (i + s) % n);
    }
    return Graph(n, std::move(edges));
}

Graph build_cycle(int n) {
    if (n < 3) throw InvalidArgument("cycle needs n >= 3");
    return build_circulant(n, {1});
}

}  // namespace ubb
