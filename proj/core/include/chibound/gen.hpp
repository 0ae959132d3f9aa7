#pragma once

#include <chibound/detect.hpp>
#include <chibound/graph_class.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

namespace chibound {

/// Rejection-sampling request.
struct GenSpec
{
    int n = 0;
    double edge_density = 0.0;
    std::vector<Pattern> forbidden;
    std::uint64_t seed = 0;
    int max_tries = 1;
};

struct Sample
{
    /// Empty when every try contained a forbidden pattern.
    std::optional<Graph> graph;
    int tries = 0;
};

/// One 53-bit uniform draw in [0, 1) from the stream.
auto unit_draw(std::mt19937_64 & rng) -> double;

/// G(n, p) from the stream: pairs in lexicographic order, one draw per
/// pair, edge iff the draw is below p.
auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph;

/// Draws G(n, p) graphs from a std::mt19937_64 seeded with spec.seed until
/// one is free of spec.forbidden, at most spec.max_tries times.
auto random_in_class(const GenSpec & spec) -> Sample;

/// Density at which at least one draw in a hundred is a class member at
/// n = 14.
auto default_density(GraphClass cls) -> double;

/// Builds a member vertex by vertex: each new vertex gets a G(n, p)-style
/// neighbourhood among the earlier ones, redrawn up to `attempts` times
/// until the graph stays forbidden-free, else it stays isolated. Every
/// pattern in the library's classes has no isolated vertex, so the result
/// is always a member. Reaches denser members than plain rejection.
auto grow_in_class(int n, double p, const std::vector<Pattern> & forbidden, std::uint64_t seed, int attempts = 8)
    -> Graph;

/// Evaluates a random cotree with alternating node kinds and n leaves,
/// then permutes the vertex ids. P4-free by construction.
auto random_cograph(int n, std::uint64_t seed) -> Graph;

/// P2uP4, diamond, gem, butterfly, C5, C7, grotzsch, petersen, two-K5s,
/// K<t>, C<k>, P<k>, clique-plus-pendant(<t>). Throws std::invalid_argument
/// on anything else.
auto named_graph(std::string_view name) -> Graph;

/// K_t plus vertex t adjacent to vertex 0 only.
auto clique_plus_pendant(int t) -> Graph;

}
