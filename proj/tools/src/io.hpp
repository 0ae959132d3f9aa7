#pragma once

#include <chibound/graph.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chibound::cli {

/// Malformed graph text. line() is 1-based.
class ParseError : public std::runtime_error
{
public:
    ParseError(int line, const std::string & what);

    auto line() const -> int { return line_; }

private:
    int line_;
};

enum class Format
{
    dimacs,
    json,
};

auto parse_format(std::string_view name) -> std::optional<Format>;
/// json for a .json extension, dimacs otherwise.
auto guess_format(std::string_view path) -> Format;

/// DIMACS .col: `c` comments, one `p edge <n> <m>` line (`p col` is also
/// accepted), then `e <u> <v>` with 1-based endpoints. Duplicate edges are
/// merged; the declared edge count is not enforced.
auto parse_dimacs(std::string_view text) -> Graph;
auto render_dimacs(const Graph & g) -> std::string;

/// {"n": <int>, "edges": [[u, v], ...]} with 0-based endpoints.
auto parse_json_graph(std::string_view text) -> Graph;
auto render_json_graph(const Graph & g) -> std::string;

auto parse_graph(std::string_view text, Format format) -> Graph;
auto render_graph(const Graph & g, Format format) -> std::string;

}
