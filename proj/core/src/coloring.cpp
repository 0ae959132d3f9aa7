#include <chibound/coloring.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace chibound {

auto to_string(Scheme scheme) -> std::string_view
{
    switch (scheme) {
    case Scheme::gem_free: return "gem";
    case Scheme::butterfly_free: return "butterfly";
    case Scheme::diamond_free: return "diamond";
    case Scheme::cograph: return "cograph";
    case Scheme::exact: return "exact";
    }
    return "unknown";
}

auto compact(const std::vector<int> & raw, int bound, Scheme scheme) -> Coloring
{
    auto palette = raw;
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    if (! palette.empty() && palette.front() < 0)
        throw std::invalid_argument("colouring has an uncoloured vertex");

    Coloring result;
    result.bound = bound;
    result.scheme = scheme;
    result.colors_used = static_cast<int>(palette.size());
    result.colors.reserve(raw.size());
    for (auto c : raw)
        result.colors.push_back(static_cast<int>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()));
    return result;
}

auto verify_coloring(const Graph & g, const Coloring & coloring) -> std::optional<Edge>
{
    if (static_cast<int>(coloring.colors.size()) != g.order())
        throw std::invalid_argument("colouring covers " + std::to_string(coloring.colors.size()) + " vertices, graph has "
            + std::to_string(g.order()));
    for (auto c : coloring.colors)
        if (c < 0)
            throw std::invalid_argument("colouring leaves a vertex uncoloured");
    for (const auto & e : g.edges())
        if (coloring.colors[e.u] == coloring.colors[e.v])
            return e;
    return std::nullopt;
}

auto distinct_colors(const Coloring & coloring) -> int
{
    return static_cast<int>(std::set<int>(coloring.colors.begin(), coloring.colors.end()).size());
}

}
