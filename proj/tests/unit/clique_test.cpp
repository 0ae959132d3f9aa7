#include <chibound/clique.hpp>
#include <chibound/detect.hpp>
#include <chibound/gen.hpp>

#include "brute.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace chibound;

TEST(MaxClique, Examples)
{
    EXPECT_EQ(max_clique(complete_graph(5)).size(), 5);
    EXPECT_EQ(max_clique(cycle_graph(5)).size(), 2);
    EXPECT_EQ(max_clique(named_graph("grotzsch")).size(), 2);
    EXPECT_EQ(clique_number(empty_graph(3)), 1);
    EXPECT_EQ(clique_number(empty_graph(0)), 0);
    EXPECT_TRUE(max_clique(empty_graph(0)).members.empty());
    EXPECT_EQ(clique_number(patterns::diamond().graph), 3);
    EXPECT_EQ(clique_number(patterns::butterfly().graph), 3);
}

TEST(MaxClique, LexicographicallyLeast)
{
    // Triangles {1,2,3} and {0,4,5}: the least one starts with 0.
    auto g = Graph::from_edge_list(6, {{1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {4, 5}});
    EXPECT_EQ(max_clique(g).members, (std::vector<Vertex>{0, 4, 5}));
    auto h = disjoint_union(complete_graph(3), complete_graph(3));
    EXPECT_EQ(max_clique(h).members, (std::vector<Vertex>{0, 1, 2}));
}

TEST(MaxClique, AgreesWithBruteForce)
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 60; ++i) {
        auto g = random_graph(12, 0.2 + 0.012 * i, rng);
        auto c = max_clique(g);
        EXPECT_EQ(c.size(), brute::clique_number(g));
        EXPECT_TRUE(is_clique(g, VertexSet(12, std::span<const Vertex>(c.members))));
        EXPECT_TRUE(std::is_sorted(c.members.begin(), c.members.end()));
        EXPECT_EQ(max_clique(g).members, c.members);
    }
}

TEST(MaxClique, LeastAmongAllMaximum)
{
    std::mt19937_64 rng(43);
    for (int i = 0; i < 30; ++i) {
        auto g = random_graph(10, 0.5, rng);
        auto w = brute::clique_number(g);
        std::vector<Vertex> least;
        for (unsigned long long mask = 0; mask < (1ULL << 10); ++mask) {
            auto s = brute::subset(10, mask);
            if (static_cast<int>(s.size()) != w || ! is_clique(g, VertexSet(10, std::span<const Vertex>(s))))
                continue;
            if (least.empty() || s < least)
                least = s;
        }
        EXPECT_EQ(max_clique(g).members, least);
    }
}

TEST(MaxClique, Within)
{
    auto g = disjoint_union(complete_graph(4), complete_graph(3));
    auto c = max_clique_within(g, VertexSet(7, {1, 2, 4, 5, 6}));
    EXPECT_EQ(c.members, (std::vector<Vertex>{4, 5, 6}));
    EXPECT_EQ(clique_number_within(g, VertexSet(7, {0, 4})), 1);
    EXPECT_TRUE(has_clique_of_size(g, VertexSet::full(7), 4));
    EXPECT_FALSE(has_clique_of_size(g, VertexSet::full(7), 5));
}
