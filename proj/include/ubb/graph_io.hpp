#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ubb/graph.hpp"

namespace ubb {

/// Decodes one graph6 string (no trailing newline). Edges come out in graph6
/// bit order: column j ascending, then row i < j ascending.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Reads a graph6 file, one graph per line. Skips blank lines and an optional
/// `>>graph6<<` header. ParseError carries the 1-based line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// {"n": int, "edges": [[u,v],...]}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Loads a graph from a path, choosing graph6 or JSON by content (JSON
/// starts with '{'). A graph6 file must hold exactly one graph.
Graph load_graph_file(const std::string& path);

}  // namespace ubb
