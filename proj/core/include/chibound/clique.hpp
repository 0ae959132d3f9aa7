#pragma once

#include <chibound/graph.hpp>

#include <vector>

namespace chibound {

struct CliqueResult
{
    /// Sorted ascending.
    std::vector<Vertex> members;

    auto size() const -> int { return static_cast<int>(members.size()); }
};

/// The lexicographically least maximum clique. The empty graph yields the
/// empty clique.
auto max_clique(const Graph & g) -> CliqueResult;
/// Lexicographically least maximum clique of G[within], in host ids.
auto max_clique_within(const Graph & g, const VertexSet & within) -> CliqueResult;

auto clique_number(const Graph & g) -> int;
auto clique_number_within(const Graph & g, const VertexSet & within) -> int;

/// Whether G[within] has a clique on at least `size` vertices.
auto has_clique_of_size(const Graph & g, const VertexSet & within, int size) -> bool;

}
