#pragma once

#include <chibound/detect.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace chibound {

/// The three (P2 u P4, X)-free classes with a colouring construction.
enum class GraphClass
{
    gem_free,
    butterfly_free,
    diamond_free,
};

auto to_string(GraphClass cls) -> std::string_view;
/// Accepts "gem", "butterfly", "diamond".
auto parse_graph_class(std::string_view name) -> std::optional<GraphClass>;

/// {P2uP4, X} for the class's X.
auto forbidden_patterns(GraphClass cls) -> std::vector<Pattern>;

/// Upper bound on the chromatic number guaranteed for the class at clique
/// number omega:
///   gem        3w - 2
///   butterfly  (w^2 + 3w - 2) / 2
///   diamond    4, 7, 9 at w = 2, 3, 4 and 2w - 1 from w = 5 on
/// Every class gives 1 at w = 1 and 0 at w = 0.
auto binding_bound(GraphClass cls, int omega) -> int;

}
