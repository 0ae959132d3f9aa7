#pragma once

#include <chibound/vertex_set.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace chibound {

struct Edge
{
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge &) const = default;
};

/// Immutable simple undirected graph on the dense vertex ids 0..order()-1.
///
/// Every constructor path goes through from_edge_list, so symmetry and
/// irreflexivity are established once and never re-checked.
class Graph
{
public:
    Graph() = default;

    /// Throws std::out_of_range for an endpoint outside 0..n-1 and
    /// std::invalid_argument for a self-loop. Duplicate edges are merged.
    static auto from_edge_list(int n, std::span<const Edge> edges) -> Graph;
    static auto from_edge_list(int n, std::initializer_list<Edge> edges) -> Graph;

    auto order() const -> int { return static_cast<int>(rows_.size()); }
    auto edge_count() const -> std::size_t;

    auto adjacent(Vertex u, Vertex v) const -> bool { return rows_[u].contains(v); }
    auto neighbors(Vertex v) const -> const VertexSet & { return rows_[v]; }
    /// Vertices other than v that are not adjacent to v.
    auto non_neighbors(Vertex v) const -> VertexSet;
    auto degree(Vertex v) const -> int { return rows_[v].size(); }

    auto vertices() const -> VertexSet { return VertexSet::full(order()); }
    /// Edges with u < v, in lexicographic order.
    auto edges() const -> std::vector<Edge>;

    auto operator==(const Graph &) const -> bool = default;

private:
    std::vector<VertexSet> rows_;
};

/// G[S] together with the map from its vertices back to the host.
struct InducedSubgraph
{
    Graph graph;
    std::vector<Vertex> to_host;
};

auto induced(const Graph & g, const VertexSet & subset) -> InducedSubgraph;
/// Induced subgraph whose i-th vertex is order[i]; order must be duplicate free.
auto induced(const Graph & g, std::span<const Vertex> order) -> InducedSubgraph;

auto complement(const Graph & g) -> Graph;
auto mycielskian(const Graph & g) -> Graph;
/// Vertices of b are shifted by a.order().
auto disjoint_union(const Graph & a, const Graph & b) -> Graph;
/// Disjoint union plus every edge between the two sides.
auto join(const Graph & a, const Graph & b) -> Graph;

auto empty_graph(int n) -> Graph;
auto complete_graph(int n) -> Graph;
auto path_graph(int n) -> Graph;
auto cycle_graph(int n) -> Graph;

// Set-level predicates used throughout the structure checks.

auto is_clique(const Graph & g, const VertexSet & s) -> bool;
auto is_stable(const Graph & g, const VertexSet & s) -> bool;
/// Some edge with both ends in s, least first.
auto find_edge_within(const Graph & g, const VertexSet & s) -> std::optional<Edge>;
/// Some edge x-y with x in a and y in b.
auto find_edge_between(const Graph & g, const VertexSet & a, const VertexSet & b) -> std::optional<Edge>;
/// Some non-adjacent pair x,y (x != y) with x in a and y in b.
auto find_non_edge_between(const Graph & g, const VertexSet & a, const VertexSet & b) -> std::optional<Edge>;
/// Vertex sets of the connected components of G[s], ordered by least member.
auto components(const Graph & g, const VertexSet & s) -> std::vector<VertexSet>;
/// Components of the complement of G[s], ordered by least member.
auto co_components(const Graph & g, const VertexSet & s) -> std::vector<VertexSet>;

}
