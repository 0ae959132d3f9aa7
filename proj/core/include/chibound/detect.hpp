#pragma once

#include <chibound/graph.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chibound {

/// A named forbidden configuration.
struct Pattern
{
    std::string name;
    Graph graph;
};

namespace patterns
{
    auto p2() -> Pattern;
    auto p3() -> Pattern;
    auto p4() -> Pattern;
    /// An edge plus a disjoint induced 4-vertex path; vertices 0-1 are the edge.
    auto p2_union_p4() -> Pattern;
    /// K4 minus the edge 0-3.
    auto diamond() -> Pattern;
    /// The path 0-1-2-3 plus vertex 4 adjacent to all of it.
    auto gem() -> Pattern;
    /// Triangles 0-1-2 and 2-3-4 sharing vertex 2.
    auto butterfly() -> Pattern;
    auto clique(int t) -> Pattern;
    auto cycle(int k) -> Pattern;
    auto anticycle(int k) -> Pattern;
    /// Two non-adjacent vertices.
    auto co_p2() -> Pattern;
}

/// Resolves names produced by the factories above ("P2uP4", "K5", "C7",
/// "antiC7", ...). Matching is case sensitive.
auto pattern_by_name(std::string_view name) -> std::optional<Pattern>;

/// An induced embedding of a named pattern: embedding[i] is the host vertex
/// playing pattern vertex i.
struct PatternWitness
{
    std::string pattern;
    std::vector<Vertex> embedding;

    auto operator==(const PatternWitness &) const -> bool = default;
};

/// True iff embedding is injective, in range, and preserves both adjacency
/// and non-adjacency.
auto is_induced_embedding(const Graph & host, const Graph & pattern, const std::vector<Vertex> & embedding) -> bool;
/// Re-checks a witness by resolving its pattern name.
auto verify_witness(const Graph & host, const PatternWitness & witness) -> bool;

/// Lexicographically least induced embedding of pattern in g, if any.
auto find_induced(const Graph & g, const Pattern & pattern) -> std::optional<PatternWitness>;
/// Same search restricted to G[within]; the witness uses host ids.
auto find_induced_within(const Graph & g, const VertexSet & within, const Pattern & pattern)
    -> std::optional<PatternWitness>;

struct PatternCheck
{
    std::string pattern;
    std::optional<PatternWitness> witness;
};

struct MembershipReport
{
    std::vector<PatternCheck> checks;

    auto member() const -> bool;
    /// First present pattern, in the order the patterns were given.
    auto first_witness() const -> std::optional<PatternWitness>;
};

auto is_in_class(const Graph & g, const std::vector<Pattern> & forbidden) -> MembershipReport;

/// Shortest odd hole C_k with 5 <= k <= max_length, as a cycle-ordered witness.
auto find_odd_hole(const Graph & g, int max_length) -> std::optional<PatternWitness>;
/// Shortest odd antihole with 7 <= k <= max_length; C5 is reported as a hole only.
auto find_odd_antihole(const Graph & g, int max_length) -> std::optional<PatternWitness>;

}
