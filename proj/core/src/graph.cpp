#include <chibound/graph.hpp>

#include <stdexcept>
#include <string>

namespace chibound {

auto Graph::from_edge_list(int n, std::span<const Edge> edges) -> Graph
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    Graph g;
    g.rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (const auto & e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::out_of_range("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has an endpoint outside 0.."
                + std::to_string(n - 1));
        if (e.u == e.v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        g.rows_[e.u].insert(e.v);
        g.rows_[e.v].insert(e.u);
    }
    return g;
}

auto Graph::from_edge_list(int n, std::initializer_list<Edge> edges) -> Graph
{
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

auto Graph::edge_count() const -> std::size_t
{
    std::size_t twice = 0;
    for (const auto & row : rows_)
        twice += static_cast<std::size_t>(row.size());
    return twice / 2;
}

auto Graph::non_neighbors(Vertex v) const -> VertexSet
{
    auto result = vertices() - rows_[v];
    result.erase(v);
    return result;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    for (Vertex u = 0; u < order(); ++u)
        for (auto v : rows_[u].above(u))
            result.push_back({u, v});
    return result;
}

auto induced(const Graph & g, const VertexSet & subset) -> InducedSubgraph
{
    auto order = subset.members();
    return induced(g, std::span<const Vertex>(order));
}

auto induced(const Graph & g, std::span<const Vertex> order) -> InducedSubgraph
{
    std::vector<Edge> edges;
    VertexSet seen(g.order());
    for (auto v : order) {
        if (v < 0 || v >= g.order())
            throw std::out_of_range("induced subgraph member " + std::to_string(v) + " out of range");
        if (seen.contains(v))
            throw std::invalid_argument("induced subgraph member " + std::to_string(v) + " repeated");
        seen.insert(v);
    }
    auto k = static_cast<int>(order.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(order[i], order[j]))
                edges.push_back({i, j});
    return {Graph::from_edge_list(k, edges), std::vector<Vertex>(order.begin(), order.end())};
}

auto complement(const Graph & g) -> Graph
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u)
        for (auto v : g.non_neighbors(u).above(u))
            edges.push_back({u, v});
    return Graph::from_edge_list(g.order(), edges);
}

auto mycielskian(const Graph & g) -> Graph
{
    // Originals keep their ids, the shadow of v is n + v, the apex is 2n.
    auto n = g.order();
    auto edges = g.edges();
    std::vector<Edge> result = edges;
    for (const auto & e : edges) {
        result.push_back({e.u, n + e.v});
        result.push_back({e.v, n + e.u});
    }
    for (Vertex v = 0; v < n; ++v)
        result.push_back({n + v, 2 * n});
    return Graph::from_edge_list(2 * n + 1, result);
}

auto disjoint_union(const Graph & a, const Graph & b) -> Graph
{
    auto edges = a.edges();
    for (const auto & e : b.edges())
        edges.push_back({e.u + a.order(), e.v + a.order()});
    return Graph::from_edge_list(a.order() + b.order(), edges);
}

auto join(const Graph & a, const Graph & b) -> Graph
{
    auto edges = disjoint_union(a, b).edges();
    for (Vertex u = 0; u < a.order(); ++u)
        for (Vertex v = 0; v < b.order(); ++v)
            edges.push_back({u, a.order() + v});
    return Graph::from_edge_list(a.order() + b.order(), edges);
}

auto empty_graph(int n) -> Graph
{
    return Graph::from_edge_list(n, {});
}

auto complete_graph(int n) -> Graph
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph::from_edge_list(n, edges);
}

auto path_graph(int n) -> Graph
{
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.push_back({v, v + 1});
    return Graph::from_edge_list(n, edges);
}

auto cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw std::invalid_argument("cycles need at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.push_back({v, (v + 1) % n});
    return Graph::from_edge_list(n, edges);
}

auto is_clique(const Graph & g, const VertexSet & s) -> bool
{
    for (auto v : s) {
        auto others = s;
        others.erase(v);
        if (! others.is_subset_of(g.neighbors(v)))
            return false;
    }
    return true;
}

auto is_stable(const Graph & g, const VertexSet & s) -> bool
{
    return ! find_edge_within(g, s);
}

auto find_edge_within(const Graph & g, const VertexSet & s) -> std::optional<Edge>
{
    for (auto u : s)
        if (auto hit = (g.neighbors(u) & s).above(u).first(); hit != -1)
            return Edge{u, hit};
    return std::nullopt;
}

auto find_edge_between(const Graph & g, const VertexSet & a, const VertexSet & b) -> std::optional<Edge>
{
    for (auto u : a)
        if (auto hit = (g.neighbors(u) & b).first(); hit != -1)
            return Edge{u, hit};
    return std::nullopt;
}

auto find_non_edge_between(const Graph & g, const VertexSet & a, const VertexSet & b) -> std::optional<Edge>
{
    for (auto u : a)
        if (auto hit = (g.non_neighbors(u) & b).first(); hit != -1)
            return Edge{u, hit};
    return std::nullopt;
}

namespace
{
    template <typename Step>
    auto sweep(const VertexSet & s, Step && reachable) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> result;
        auto remaining = s;
        while (! remaining.empty()) {
            VertexSet part(s.capacity());
            auto frontier = VertexSet(s.capacity(), {remaining.first()});
            while (! frontier.empty()) {
                part |= frontier;
                remaining -= frontier;
                VertexSet grown(s.capacity());
                for (auto v : frontier)
                    grown |= reachable(v) & remaining;
                frontier = grown;
            }
            result.push_back(std::move(part));
        }
        return result;
    }
}

auto components(const Graph & g, const VertexSet & s) -> std::vector<VertexSet>
{
    return sweep(s, [&](Vertex v) -> const VertexSet & { return g.neighbors(v); });
}

auto co_components(const Graph & g, const VertexSet & s) -> std::vector<VertexSet>
{
    return sweep(s, [&](Vertex v) { return g.non_neighbors(v); });
}

}
