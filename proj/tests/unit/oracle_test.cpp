#include <chibound/clique.hpp>
#include <chibound/gen.hpp>
#include <chibound/oracle.hpp>

#include "brute.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace chibound;

namespace {

void expect_optimal(const Graph & g, const OracleResult & r)
{
    EXPECT_TRUE(brute::is_proper(g, r.witness.colors));
    EXPECT_EQ(r.witness.colors_used, r.chi);
    EXPECT_EQ(distinct_colors(r.witness), r.chi);
    EXPECT_EQ(r.witness.scheme, Scheme::exact);
}

}

TEST(Oracle, Examples)
{
    EXPECT_EQ(chromatic_number(empty_graph(0)).chi, 0);
    EXPECT_EQ(chromatic_number(empty_graph(4)).chi, 1);
    EXPECT_EQ(chromatic_number(complete_graph(6)).chi, 6);
    EXPECT_EQ(chromatic_number(cycle_graph(5)).chi, 3);
    EXPECT_EQ(chromatic_number(cycle_graph(7)).chi, 3);
    EXPECT_EQ(chromatic_number(cycle_graph(8)).chi, 2);
    EXPECT_EQ(chromatic_number(named_graph("petersen")).chi, 3);
    auto g = named_graph("grotzsch");
    auto r = chromatic_number(g);
    EXPECT_EQ(r.chi, 4);
    expect_optimal(g, r);
}

TEST(Oracle, SizeGuard)
{
    EXPECT_THROW((void) chromatic_number(empty_graph(21)), SizeGuardExceeded);
    EXPECT_NO_THROW((void) chromatic_number(empty_graph(20)));
    EXPECT_THROW((void) chromatic_number(empty_graph(6), {.max_order = 5}), SizeGuardExceeded);
    EXPECT_EQ(chromatic_number(empty_graph(30), {.max_order = 30}).chi, 1);
}

TEST(Oracle, AgreesWithBruteForce)
{
    std::mt19937_64 rng(83);
    for (int i = 0; i < 80; ++i) {
        auto g = random_graph(5 + i % 7, 0.15 + 0.01 * i, rng);
        auto r = chromatic_number(g);
        EXPECT_EQ(r.chi, brute::chromatic_number(g));
        expect_optimal(g, r);
        // chi colours suffice and chi - 1 do not.
        EXPECT_TRUE(brute::colorable(g, r.chi));
        if (r.chi > 0)
            EXPECT_FALSE(brute::colorable(g, r.chi - 1));
    }
}

TEST(Oracle, LargerGraphsBracketed)
{
    std::mt19937_64 rng(89);
    for (int i = 0; i < 10; ++i) {
        auto g = random_graph(18, 0.5, rng);
        auto r = chromatic_number(g);
        expect_optimal(g, r);
        EXPECT_GE(r.chi, clique_number(g));
        EXPECT_FALSE(brute::colorable(g, r.chi - 1));
    }
}

TEST(Oracle, Deterministic)
{
    auto g = named_graph("grotzsch");
    EXPECT_EQ(chromatic_number(g).witness.colors, chromatic_number(g).witness.colors);
}
