#include <chibound/detect.hpp>

#include <charconv>
#include <stdexcept>

namespace chibound {

namespace patterns
{
    auto p2() -> Pattern { return {"P2", path_graph(2)}; }
    auto p3() -> Pattern { return {"P3", path_graph(3)}; }
    auto p4() -> Pattern { return {"P4", path_graph(4)}; }

    auto p2_union_p4() -> Pattern { return {"P2uP4", disjoint_union(path_graph(2), path_graph(4))}; }

    auto diamond() -> Pattern { return {"diamond", Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})}; }

    auto gem() -> Pattern
    {
        return {"gem", Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}})};
    }

    auto butterfly() -> Pattern
    {
        return {"butterfly", Graph::from_edge_list(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}})};
    }

    auto clique(int t) -> Pattern { return {"K" + std::to_string(t), complete_graph(t)}; }
    auto cycle(int k) -> Pattern { return {"C" + std::to_string(k), cycle_graph(k)}; }
    auto anticycle(int k) -> Pattern { return {"antiC" + std::to_string(k), complement(cycle_graph(k))}; }
    auto co_p2() -> Pattern { return {"2K1", empty_graph(2)}; }
}

namespace
{
    auto parse_suffix(std::string_view name, std::string_view prefix) -> std::optional<int>
    {
        if (! name.starts_with(prefix) || name.size() == prefix.size())
            return std::nullopt;
        auto digits = name.substr(prefix.size());
        int value = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || end != digits.data() + digits.size())
            return std::nullopt;
        return value;
    }

    struct Search
    {
        const Graph & host;
        const Graph & pattern;
        std::vector<Vertex> mapped;

        auto extend(const VertexSet & pool) -> bool
        {
            auto depth = static_cast<Vertex>(mapped.size());
            if (depth == pattern.order())
                return true;

            auto candidates = pool;
            for (Vertex j = 0; j < depth; ++j) {
                if (pattern.adjacent(depth, j))
                    candidates &= host.neighbors(mapped[j]);
                else
                    candidates -= host.neighbors(mapped[j]);
            }
            for (auto h : candidates) {
                mapped.push_back(h);
                auto rest = pool;
                rest.erase(h);
                if (extend(rest))
                    return true;
                mapped.pop_back();
            }
            return false;
        }
    };

    // Induced cycles of exact length k whose least vertex is the start and
    // whose second vertex is below the last, so each cycle is met once.
    struct HoleSearch
    {
        const Graph & g;
        int k;
        std::vector<Vertex> path;

        auto extend(const VertexSet & allowed, const VertexSet & blocked) -> bool
        {
            auto depth = static_cast<int>(path.size());
            auto last = path.back();
            if (depth == k - 1) {
                auto closing = g.neighbors(last) & g.neighbors(path.front()) & allowed;
                closing -= blocked;
                closing = closing.above(path[1]);
                if (auto v = closing.first(); v != -1) {
                    path.push_back(v);
                    return true;
                }
                return false;
            }

            auto candidates = g.neighbors(last) & allowed;
            candidates -= blocked;
            if (depth >= 2)
                candidates -= g.neighbors(path.front());
            for (auto v : candidates) {
                path.push_back(v);
                auto next_allowed = allowed;
                next_allowed.erase(v);
                auto next_blocked = blocked;
                if (depth >= 2)
                    next_blocked |= g.neighbors(path[static_cast<std::size_t>(depth - 1)]);
                if (extend(next_allowed, next_blocked))
                    return true;
                path.pop_back();
            }
            return false;
        }
    };

    auto find_hole_of_length(const Graph & g, int k) -> std::optional<std::vector<Vertex>>
    {
        for (Vertex s = 0; s < g.order(); ++s) {
            HoleSearch search{g, k, {s}};
            auto allowed = g.vertices().above(s);
            if (search.extend(allowed, VertexSet(g.order())))
                return search.path;
        }
        return std::nullopt;
    }
}

auto pattern_by_name(std::string_view name) -> std::optional<Pattern>
{
    if (name == "P2")
        return patterns::p2();
    if (name == "P3")
        return patterns::p3();
    if (name == "P4")
        return patterns::p4();
    if (name == "P2uP4")
        return patterns::p2_union_p4();
    if (name == "diamond")
        return patterns::diamond();
    if (name == "gem")
        return patterns::gem();
    if (name == "butterfly")
        return patterns::butterfly();
    if (name == "2K1")
        return patterns::co_p2();
    if (auto t = parse_suffix(name, "antiC"); t && *t >= 3)
        return patterns::anticycle(*t);
    if (auto t = parse_suffix(name, "K"); t && *t >= 1)
        return patterns::clique(*t);
    if (auto t = parse_suffix(name, "C"); t && *t >= 3)
        return patterns::cycle(*t);
    return std::nullopt;
}

auto is_induced_embedding(const Graph & host, const Graph & pattern, const std::vector<Vertex> & embedding) -> bool
{
    if (static_cast<int>(embedding.size()) != pattern.order())
        return false;
    VertexSet used(host.order());
    for (auto h : embedding) {
        if (h < 0 || h >= host.order() || used.contains(h))
            return false;
        used.insert(h);
    }
    for (Vertex i = 0; i < pattern.order(); ++i)
        for (Vertex j = i + 1; j < pattern.order(); ++j)
            if (pattern.adjacent(i, j) != host.adjacent(embedding[i], embedding[j]))
                return false;
    return true;
}

auto verify_witness(const Graph & host, const PatternWitness & witness) -> bool
{
    auto pattern = pattern_by_name(witness.pattern);
    return pattern && is_induced_embedding(host, pattern->graph, witness.embedding);
}

auto find_induced(const Graph & g, const Pattern & pattern) -> std::optional<PatternWitness>
{
    return find_induced_within(g, g.vertices(), pattern);
}

auto find_induced_within(const Graph & g, const VertexSet & within, const Pattern & pattern)
    -> std::optional<PatternWitness>
{
    if (pattern.graph.order() > within.size())
        return std::nullopt;
    Search search{g, pattern.graph, {}};
    if (search.extend(within))
        return PatternWitness{pattern.name, std::move(search.mapped)};
    return std::nullopt;
}

auto MembershipReport::member() const -> bool
{
    for (const auto & c : checks)
        if (c.witness)
            return false;
    return true;
}

auto MembershipReport::first_witness() const -> std::optional<PatternWitness>
{
    for (const auto & c : checks)
        if (c.witness)
            return c.witness;
    return std::nullopt;
}

auto is_in_class(const Graph & g, const std::vector<Pattern> & forbidden) -> MembershipReport
{
    MembershipReport report;
    for (const auto & p : forbidden)
        report.checks.push_back({p.name, find_induced(g, p)});
    return report;
}

auto find_odd_hole(const Graph & g, int max_length) -> std::optional<PatternWitness>
{
    for (int k = 5; k <= max_length && k <= g.order(); k += 2)
        if (auto cycle = find_hole_of_length(g, k))
            return PatternWitness{"C" + std::to_string(k), std::move(*cycle)};
    return std::nullopt;
}

auto find_odd_antihole(const Graph & g, int max_length) -> std::optional<PatternWitness>
{
    auto co = complement(g);
    for (int k = 7; k <= max_length && k <= g.order(); k += 2)
        if (auto cycle = find_hole_of_length(co, k))
            return PatternWitness{"antiC" + std::to_string(k), std::move(*cycle)};
    return std::nullopt;
}

}
