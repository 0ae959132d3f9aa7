#include "io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace chibound::cli {

namespace {

// Adjacency is a dense bitset, so larger inputs are refused up front.
constexpr long long max_vertices = 16384;

auto tokens(std::string_view line) -> std::vector<std::string_view>
{
    std::vector<std::string_view> result;
    std::size_t at = 0;
    while (at < line.size()) {
        while (at < line.size() && std::isspace(static_cast<unsigned char>(line[at])))
            ++at;
        auto start = at;
        while (at < line.size() && ! std::isspace(static_cast<unsigned char>(line[at])))
            ++at;
        if (at > start)
            result.push_back(line.substr(start, at - start));
    }
    return result;
}

auto integer(std::string_view token, int line, const char * what) -> long long
{
    long long value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size())
        throw ParseError(line, std::string("expected an integer for ") + what + ", got '" + std::string(token) + "'");
    return value;
}

/// 1-based line of a byte offset.
auto line_of(std::string_view text, std::size_t offset) -> int
{
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

}

ParseError::ParseError(int line, const std::string & what) :
    std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
{
}

auto parse_format(std::string_view name) -> std::optional<Format>
{
    if (name == "dimacs")
        return Format::dimacs;
    if (name == "json")
        return Format::json;
    return std::nullopt;
}

auto guess_format(std::string_view path) -> Format
{
    return path.ends_with(".json") ? Format::json : Format::dimacs;
}

auto parse_dimacs(std::string_view text) -> Graph
{
    std::optional<int> n;
    std::vector<Edge> edges;
    int line_no = 0;
    int last_text = 1;

    std::size_t at = 0;
    while (at <= text.size()) {
        auto end = text.find('\n', at);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(at, end - at);
        at = end + 1;
        ++line_no;

        auto t = tokens(line);
        if (! t.empty())
            last_text = line_no;
        if (t.empty() || t[0] == "c")
            continue;

        if (t[0] == "p") {
            if (n)
                throw ParseError(line_no, "second problem line");
            if (t.size() != 4 || (t[1] != "edge" && t[1] != "col"))
                throw ParseError(line_no, "problem line must read 'p edge <n> <m>'");
            auto count = integer(t[2], line_no, "the vertex count");
            integer(t[3], line_no, "the edge count");
            if (count < 0 || count > max_vertices)
                throw ParseError(line_no, "vertex count out of range");
            n = static_cast<int>(count);
        }
        else if (t[0] == "e") {
            if (! n)
                throw ParseError(line_no, "edge line before the problem line");
            if (t.size() != 3)
                throw ParseError(line_no, "edge line must read 'e <u> <v>'");
            auto u = integer(t[1], line_no, "an endpoint");
            auto v = integer(t[2], line_no, "an endpoint");
            if (u < 1 || u > *n || v < 1 || v > *n)
                throw ParseError(line_no, "endpoint outside 1.." + std::to_string(*n));
            if (u == v)
                throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
            edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
        }
        else
            throw ParseError(line_no, "unknown line type '" + std::string(t[0]) + "'");
    }

    if (! n)
        throw ParseError(last_text, "missing problem line");
    return Graph::from_edge_list(*n, edges);
}

auto render_dimacs(const Graph & g) -> std::string
{
    std::ostringstream out;
    auto edges = g.edges();
    out << "p edge " << g.order() << ' ' << edges.size() << '\n';
    for (const auto & e : edges)
        out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

auto parse_json_graph(std::string_view text) -> Graph
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error & e) {
        throw ParseError(line_of(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
    }

    if (! doc.is_object() || ! doc.contains("n") || ! doc["n"].is_number_integer())
        throw ParseError(1, "expected an object with an integer \"n\"");
    auto n = doc["n"].get<long long>();
    if (n < 0 || n > max_vertices)
        throw ParseError(1, "vertex count out of range");

    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        if (! doc["edges"].is_array())
            throw ParseError(1, "\"edges\" must be an array");
        for (const auto & e : doc["edges"]) {
            if (! e.is_array() || e.size() != 2 || ! e[0].is_number_integer() || ! e[1].is_number_integer())
                throw ParseError(1, "each edge must be a pair of integers");
            auto u = e[0].get<long long>();
            auto v = e[1].get<long long>();
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError(1, "endpoint outside 0.." + std::to_string(n - 1));
            if (u == v)
                throw ParseError(1, "self-loop at vertex " + std::to_string(u));
            edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

auto render_json_graph(const Graph & g) -> std::string
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto & e : g.edges())
        edges.push_back({e.u, e.v});
    return nlohmann::json{{"n", g.order()}, {"edges", edges}}.dump() + "\n";
}

auto parse_graph(std::string_view text, Format format) -> Graph
{
    return format == Format::json ? parse_json_graph(text) : parse_dimacs(text);
}

auto render_graph(const Graph & g, Format format) -> std::string
{
    return format == Format::json ? render_json_graph(g) : render_dimacs(g);
}

}
