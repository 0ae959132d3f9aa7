#pragma once

#include <chibound/graph.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace chibound {

/// Which construction produced a colouring.
enum class Scheme
{
    gem_free,
    butterfly_free,
    diamond_free,
    cograph,
    exact,
};

auto to_string(Scheme scheme) -> std::string_view;

/// A total colouring: colors[v] is the 0-based colour of v.
///
/// Colourings built by this library are compact: every colour below
/// colors_used appears on some vertex.
struct Coloring
{
    std::vector<int> colors;
    int colors_used = 0;
    int bound = 0;
    Scheme scheme = Scheme::exact;
};

/// Relabels arbitrary non-negative raw colours to 0..k-1 preserving their
/// relative order. Throws std::invalid_argument on a negative entry.
auto compact(const std::vector<int> & raw, int bound, Scheme scheme) -> Coloring;

/// The least monochromatic edge, or nothing if the colouring is proper.
/// Throws std::invalid_argument when the assignment is not total on G.
auto verify_coloring(const Graph & g, const Coloring & coloring) -> std::optional<Edge>;

/// colors_used recomputed from the assignment.
auto distinct_colors(const Coloring & coloring) -> int;

}
