#pragma once

// Evidence extraction and bookkeeping for structural claims. Shared by
// verify_structure and the colourers, which assert the same claims.

#include <chibound/certificate.hpp>
#include <chibound/wagon.hpp>

#include <optional>
#include <string>
#include <vector>

namespace chibound::detail {

using Evidence = std::optional<Certificate>;

auto witness(std::string pattern, std::vector<Vertex> embedding) -> Certificate;

/// An edge inside s.
auto edge_in(const Graph & g, const VertexSet & s) -> Evidence;
/// Some member of s.
auto member_of(const VertexSet & s) -> Evidence;
/// An edge from a to b.
auto edge_between(const Graph & g, const VertexSet & a, const VertexSet & b) -> Evidence;
/// A non-adjacent pair from a to b.
auto non_edge_between(const Graph & g, const VertexSet & a, const VertexSet & b) -> Evidence;
/// A member of a and a member of b, named as P2 or 2K1.
auto pair_across(const Graph & g, const VertexSet & a, const VertexSet & b) -> Evidence;
auto p4_in(const Graph & g, const VertexSet & s) -> Evidence;
auto p3_in(const Graph & g, const VertexSet & s) -> Evidence;
/// A vertex of s with two neighbours in the clique t.
auto two_neighbors_in(const Graph & g, const VertexSet & s, const VertexSet & t) -> Evidence;
/// A clique of size bound + 1 inside s.
auto clique_above(const Graph & g, const VertexSet & s, int bound) -> Evidence;

template <typename... Rest>
auto first_of(Evidence first, Rest &&... rest) -> Evidence
{
    if constexpr (sizeof...(rest) == 0)
        return first;
    else
        return first ? first : first_of(std::forward<Rest>(rest)...);
}

class ClaimChecker
{
public:
    ClaimChecker(const Graph & g, std::vector<Pattern> forbidden);

    /// Vertices searched first when looking for a forbidden witness.
    void add_context(const VertexSet & s);

    /// Records the claim; returns whether it held.
    auto record(std::string claim, std::string statement, Evidence evidence) -> bool;

    auto facts() const -> const std::vector<Fact> & { return facts_; }
    auto first_violation() const -> std::optional<StructureViolation>;
    auto held_claims() const -> std::vector<std::string>;

    auto graph() const -> const Graph & { return g_; }

private:
    auto search_forbidden(const Certificate & evidence) const -> std::optional<PatternWitness>;

    const Graph & g_;
    std::vector<Pattern> forbidden_;
    VertexSet context_;
    std::vector<Fact> facts_;
};

}
