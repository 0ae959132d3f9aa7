#include <chibound/gen.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chibound {

namespace {

/// Uniform in [0, bound), by plain modulo so the stream is easy to
/// reproduce elsewhere.
auto below(std::mt19937_64 & rng, int bound) -> int
{
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

void shuffle(std::vector<Vertex> & items, std::mt19937_64 & rng)
{
    for (int i = static_cast<int>(items.size()) - 1; i > 0; --i)
        std::swap(items[static_cast<std::size_t>(i)], items[static_cast<std::size_t>(below(rng, i + 1))]);
}

/// Adds the cotree on `leaves` to edges; children of a join node are
/// completely joined.
void build_cotree(const std::vector<Vertex> & leaves, bool join_node, std::mt19937_64 & rng, std::vector<Edge> & edges)
{
    auto k = static_cast<int>(leaves.size());
    if (k == 1)
        return;

    // Split into 2..min(k, 4) nonempty consecutive runs.
    auto parts = 2 + below(rng, std::min(k, 4) - 1);
    std::vector<int> cuts(static_cast<std::size_t>(k - 1));
    std::iota(cuts.begin(), cuts.end(), 1);
    shuffle(cuts, rng);
    cuts.resize(static_cast<std::size_t>(parts - 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(k);

    std::vector<std::vector<Vertex>> children;
    int from = 0;
    for (auto to : cuts) {
        children.emplace_back(leaves.begin() + from, leaves.begin() + to);
        from = to;
    }

    for (const auto & child : children)
        build_cotree(child, ! join_node, rng, edges);
    if (join_node)
        for (std::size_t a = 0; a < children.size(); ++a)
            for (std::size_t b = a + 1; b < children.size(); ++b)
                for (auto u : children[a])
                    for (auto v : children[b])
                        edges.push_back({u, v});
}

auto parse_count(std::string_view text) -> std::optional<int>
{
    int value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || text.empty())
        return std::nullopt;
    return value;
}

auto suffix(std::string_view name, std::string_view prefix) -> std::optional<int>
{
    if (! name.starts_with(prefix))
        return std::nullopt;
    return parse_count(name.substr(prefix.size()));
}

}

auto unit_draw(std::mt19937_64 & rng) -> double
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_draw(rng) < p)
                edges.push_back({u, v});
    return Graph::from_edge_list(n, edges);
}

auto random_in_class(const GenSpec & spec) -> Sample
{
    if (spec.n < 0)
        throw std::invalid_argument("negative vertex count");
    if (! (spec.edge_density >= 0.0 && spec.edge_density <= 1.0))
        throw std::invalid_argument("edge density must lie in [0, 1]");
    if (spec.max_tries < 1)
        throw std::invalid_argument("max_tries must be at least 1");

    std::mt19937_64 rng(spec.seed);
    for (int t = 1; t <= spec.max_tries; ++t) {
        auto g = random_graph(spec.n, spec.edge_density, rng);
        if (is_in_class(g, spec.forbidden).member())
            return Sample{std::move(g), t};
    }
    return Sample{std::nullopt, spec.max_tries};
}

auto default_density(GraphClass cls) -> double
{
    // Measured at n = 14: about 2.5% of draws pass for every class, with
    // P2 u P4 causing nearly all rejections. At 0.15 the rate is 1.6%.
    switch (cls) {
    case GraphClass::gem_free: return 0.14;
    case GraphClass::butterfly_free: return 0.14;
    case GraphClass::diamond_free: return 0.14;
    }
    return 0.14;
}

auto grow_in_class(int n, double p, const std::vector<Pattern> & forbidden, std::uint64_t seed, int attempts) -> Graph
{
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        for (int a = 0; a < attempts; ++a) {
            auto trial = edges;
            for (int u = 0; u < v; ++u)
                if (unit_draw(rng) < p)
                    trial.push_back({u, v});
            if (is_in_class(Graph::from_edge_list(v + 1, trial), forbidden).member()) {
                edges = std::move(trial);
                break;
            }
        }
    }
    return Graph::from_edge_list(std::max(n, 0), edges);
}

auto random_cograph(int n, std::uint64_t seed) -> Graph
{
    if (n < 1)
        throw std::invalid_argument("a cograph needs at least one vertex");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> leaves(static_cast<std::size_t>(n));
    std::iota(leaves.begin(), leaves.end(), 0);
    shuffle(leaves, rng);

    std::vector<Edge> edges;
    auto root_is_join = below(rng, 2) == 1;
    build_cotree(leaves, root_is_join, rng, edges);
    return Graph::from_edge_list(n, edges);
}

auto clique_plus_pendant(int t) -> Graph
{
    if (t < 1)
        throw std::invalid_argument("clique-plus-pendant needs t >= 1");
    std::vector<Edge> edges = complete_graph(t).edges();
    edges.push_back({0, t});
    return Graph::from_edge_list(t + 1, edges);
}

auto named_graph(std::string_view name) -> Graph
{
    if (name == "P2uP4")
        return patterns::p2_union_p4().graph;
    if (name == "diamond")
        return patterns::diamond().graph;
    if (name == "gem")
        return patterns::gem().graph;
    if (name == "butterfly")
        return patterns::butterfly().graph;
    if (name == "grotzsch")
        return mycielskian(cycle_graph(5));
    if (name == "petersen") {
        std::vector<Edge> edges;
        for (int i = 0; i < 5; ++i) {
            edges.push_back({i, (i + 1) % 5});
            edges.push_back({i, i + 5});
            edges.push_back({5 + i, 5 + (i + 2) % 5});
        }
        return Graph::from_edge_list(10, edges);
    }
    if (name == "two-K5s")
        return disjoint_union(complete_graph(5), complete_graph(5));
    if (name.starts_with("clique-plus-pendant(") && name.ends_with(")")) {
        auto inner = name.substr(20, name.size() - 21);
        if (auto t = parse_count(inner); t && *t >= 1)
            return clique_plus_pendant(*t);
    }
    if (auto t = suffix(name, "K"); t && *t >= 0)
        return complete_graph(*t);
    if (auto k = suffix(name, "C"); k && *k >= 3)
        return cycle_graph(*k);
    if (auto k = suffix(name, "P"); k && *k >= 1)
        return path_graph(*k);
    throw std::invalid_argument("unknown named graph '" + std::string(name) + "'");
}

}
