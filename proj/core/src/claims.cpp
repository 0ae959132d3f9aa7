#include "claims.hpp"

#include <chibound/clique.hpp>

namespace chibound::detail {

auto witness(std::string pattern, std::vector<Vertex> embedding) -> Certificate
{
    return PatternWitness{std::move(pattern), std::move(embedding)};
}

auto edge_in(const Graph & g, const VertexSet & s) -> Evidence
{
    if (auto e = find_edge_within(g, s))
        return witness("P2", {e->u, e->v});
    return std::nullopt;
}

auto member_of(const VertexSet & s) -> Evidence
{
    if (auto v = s.first(); v != -1)
        return witness("K1", {v});
    return std::nullopt;
}

auto edge_between(const Graph & g, const VertexSet & a, const VertexSet & b) -> Evidence
{
    if (auto e = find_edge_between(g, a, b))
        return witness("P2", {e->u, e->v});
    return std::nullopt;
}

auto non_edge_between(const Graph & g, const VertexSet & a, const VertexSet & b) -> Evidence
{
    if (auto e = find_non_edge_between(g, a, b))
        return witness("2K1", {e->u, e->v});
    return std::nullopt;
}

auto pair_across(const Graph & g, const VertexSet & a, const VertexSet & b) -> Evidence
{
    auto x = a.first();
    auto y = b.first();
    if (x == -1 || y == -1)
        return std::nullopt;
    return witness(g.adjacent(x, y) ? "P2" : "2K1", {x, y});
}

auto p4_in(const Graph & g, const VertexSet & s) -> Evidence
{
    if (auto w = find_induced_within(g, s, patterns::p4()))
        return Certificate{*w};
    return std::nullopt;
}

auto p3_in(const Graph & g, const VertexSet & s) -> Evidence
{
    if (auto w = find_induced_within(g, s, patterns::p3()))
        return Certificate{*w};
    return std::nullopt;
}

auto two_neighbors_in(const Graph & g, const VertexSet & s, const VertexSet & t) -> Evidence
{
    for (auto x : s) {
        auto seen = (g.neighbors(x) & t).members();
        if (seen.size() >= 2) {
            auto p = seen[0];
            auto q = seen[1];
            if (g.adjacent(p, q))
                return witness("K3", {x, p, q});
            return witness("P3", {p, x, q});
        }
    }
    return std::nullopt;
}

auto clique_above(const Graph & g, const VertexSet & s, int bound) -> Evidence
{
    auto best = max_clique_within(g, s);
    if (best.size() <= bound)
        return std::nullopt;
    best.members.resize(static_cast<std::size_t>(bound + 1));
    return witness("K" + std::to_string(bound + 1), std::move(best.members));
}

ClaimChecker::ClaimChecker(const Graph & g, std::vector<Pattern> forbidden) :
    g_(g), forbidden_(std::move(forbidden)), context_(g.order())
{
}

void ClaimChecker::add_context(const VertexSet & s)
{
    context_ |= s;
}

auto ClaimChecker::record(std::string claim, std::string statement, Evidence evidence) -> bool
{
    Fact fact{std::move(claim), std::move(statement), std::nullopt};
    if (evidence) {
        auto forbidden = search_forbidden(*evidence);
        fact.violation = StructureViolation{fact.claim, fact.statement, std::move(*evidence), std::move(forbidden)};
    }
    auto held = fact.holds();
    facts_.push_back(std::move(fact));
    return held;
}

auto ClaimChecker::first_violation() const -> std::optional<StructureViolation>
{
    for (const auto & f : facts_)
        if (f.violation)
            return f.violation;
    return std::nullopt;
}

auto ClaimChecker::held_claims() const -> std::vector<std::string>
{
    std::vector<std::string> result;
    for (const auto & f : facts_)
        if (f.holds())
            result.push_back(f.claim);
    return result;
}

auto ClaimChecker::search_forbidden(const Certificate & evidence) const -> std::optional<PatternWitness>
{
    auto focus = context_;
    if (auto w = std::get_if<PatternWitness>(&evidence))
        for (auto v : w->embedding)
            focus.insert(v);
    else
        for (auto v : std::get<CliqueCertificate>(evidence).members)
            focus.insert(v);

    for (const auto & p : forbidden_)
        if (auto w = find_induced_within(g_, focus, p))
            return w;
    for (const auto & p : forbidden_)
        if (auto w = find_induced(g_, p))
            return w;
    return std::nullopt;
}

}
