#include "ubb/graph_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "ubb/error.hpp"

namespace ubb {

namespace {

constexpr int kBias = 63;
constexpr char kHeader[] = ">>graph6<<";

int sextet(char c) {
    const int v = static_cast<unsigned char>(c) - kBias;
    if (v < 0 || v > 63) throw ParseError(std::string("invalid graph6 character '") + c + "'");
    return v;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(kHeader)) text.remove_prefix(sizeof(kHeader) - 1);
    if (text.empty()) throw ParseError("empty graph6 string");

    std::size_t pos = 0;
    long long n = 0;
    if (text[0] != '~') {
        n = sextet(text[0]);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4) throw ParseError("truncated graph6 size field");
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
        if (n < 63) throw ParseError("non-canonical graph6 size field");
        pos = 4;
    } else {
        if (text.size() < 8) throw ParseError("truncated graph6 size field");
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text[i]);
        if (n < 258048) throw ParseError("non-canonical graph6 size field");
        if (n > (1LL << 20)) throw ParseError("graph6 vertex count too large");
        pos = 8;
    }

    const long long bits = n * (n - 1) / 2;
    const std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != expected)
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " characters, expected " +
                         std::to_string(expected));

    std::vector<std::pair<VertexId, VertexId>> edges;
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = sextet(text[pos + static_cast<std::size_t>(k / 6)]);
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    for (; k < static_cast<long long>(expected) * 6; ++k) {
        const int byte = sextet(text[pos + static_cast<std::size_t>(k / 6)]);
        if ((byte >> (5 - k % 6)) & 1) throw ParseError("nonzero graph6 padding bits");
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.find_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        } catch (const InvalidArgument& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return graphs;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("edge entries must be [u, v] pairs");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return Graph(n, std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return graph_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(path + ": " + e.what());
        }
    }
    std::istringstream lines(text);
    auto graphs = read_graph6_stream(lines);
    if (graphs.size() != 1)
        throw ParseError(path + ": expected exactly one graph, found " + std::to_string(graphs.size()));
    return std::move(graphs.front());
}

}  // namespace ubb
