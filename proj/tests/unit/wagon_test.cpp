#include <chibound/gen.hpp>
#include <chibound/wagon.hpp>

#include "corpus.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using namespace chibound;

namespace {

auto partition_of(const Graph & g) -> WagonPartition
{
    auto p = wagon_partition(g, max_clique(g));
    EXPECT_TRUE(p);
    return std::move(p).value();
}

/// The clique, the singles and the pairs are pairwise disjoint and cover V.
void expect_partition(const Graph & g, const WagonPartition & p)
{
    auto w = p.omega();
    auto covered = p.clique_set();
    auto total = covered.size();
    for (int a = 0; a < w; ++a) {
        const auto & s = p.single(a);
        total += s.size();
        covered |= s;
        for (auto x : s) {
            for (int k = 0; k < w; ++k)
                EXPECT_EQ(g.adjacent(x, p.clique()[k]), k != a);
        }
    }
    for (int i = 0; i < w; ++i)
        for (int j = i + 1; j < w; ++j) {
            const auto & s = p.pair(i, j);
            total += s.size();
            covered |= s;
            for (auto x : s) {
                // i and j are the two least non-neighbours in A.
                EXPECT_FALSE(g.adjacent(x, p.clique()[i]));
                EXPECT_FALSE(g.adjacent(x, p.clique()[j]));
                for (int k = 0; k < j; ++k)
                    if (k != i)
                        EXPECT_TRUE(g.adjacent(x, p.clique()[k]));
            }
        }
    EXPECT_EQ(covered, g.vertices());
    EXPECT_EQ(total, g.order());
}

}

TEST(Wagon, Triangle)
{
    auto p = partition_of(complete_graph(3));
    EXPECT_EQ(p.omega(), 3);
    EXPECT_EQ(p.clique(), (std::vector<Vertex>{0, 1, 2}));
    for (int a = 0; a < 3; ++a)
        EXPECT_TRUE(p.single(a).empty());
    EXPECT_TRUE(p.pair(0, 1).empty());
}

TEST(Wagon, FiveCycle)
{
    auto p = partition_of(cycle_graph(5));
    EXPECT_EQ(p.clique(), (std::vector<Vertex>{0, 1}));
    EXPECT_EQ(p.single(0), VertexSet(5, {2}));
    EXPECT_EQ(p.single(1), VertexSet(5, {4}));
    EXPECT_EQ(p.pair(0, 1), VertexSet(5, {3}));
}

TEST(Wagon, TwoK5s)
{
    auto g = named_graph("two-K5s");
    auto p = partition_of(g);
    EXPECT_EQ(p.clique(), (std::vector<Vertex>{0, 1, 2, 3, 4}));
    EXPECT_EQ(p.pair(0, 1), VertexSet(10, {5, 6, 7, 8, 9}));
    EXPECT_TRUE(verify_structure(g, p, GraphClass::diamond_free).all_hold());
}

TEST(Wagon, Grotzsch)
{
    auto g = named_graph("grotzsch");
    auto p = partition_of(g);
    EXPECT_EQ(p.omega(), 2);
    expect_partition(g, p);
    auto report = verify_structure(g, p, GraphClass::diamond_free);
    EXPECT_TRUE(report.all_hold());
    EXPECT_TRUE(report.find("pair_sets_p4_free"));
}

TEST(Wagon, PairIndexOrder)
{
    WagonPartition p({0, 1, 2, 3}, 4);
    EXPECT_EQ(p.pair_index(0, 1), 0u);
    EXPECT_EQ(p.pair_index(0, 3), 2u);
    EXPECT_EQ(p.pair_index(1, 2), 3u);
    EXPECT_EQ(p.pair_index(2, 3), 5u);
    EXPECT_THROW((void) p.pair_index(1, 1), std::out_of_range);
    EXPECT_THROW((void) p.pair_index(2, 4), std::out_of_range);
    EXPECT_THROW((void) p.single(4), std::out_of_range);
}

TEST(Wagon, NonMaximumAnchorIsRefused)
{
    auto g = complete_graph(4);
    auto p = wagon_partition(g, CliqueResult{{0, 1, 2}});
    ASSERT_FALSE(p);
    EXPECT_EQ(p.failure().claim, "anchor_is_maximum");
    EXPECT_TRUE(verify_certificate(g, p.failure().evidence));
    EXPECT_EQ(std::get<CliqueCertificate>(p.failure().evidence).members, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(Wagon, NonCliqueAnchorThrows)
{
    EXPECT_THROW((void) wagon_partition(path_graph(3), CliqueResult{{0, 2}}), std::invalid_argument);
}

TEST(Wagon, InvariantsOnRandomGraphs)
{
    std::mt19937_64 rng(59);
    for (int i = 0; i < 500; ++i) {
        auto g = random_graph(4 + i % 13, 0.2 + 0.001 * i, rng);
        expect_partition(g, partition_of(g));
    }
}

TEST(Wagon, InClassStructureHolds)
{
    for (auto cls : {GraphClass::gem_free, GraphClass::butterfly_free, GraphClass::diamond_free})
        for (const auto & inst : corpus::grown(cls, 60, 7)) {
            auto p = partition_of(inst.graph);
            auto report = verify_structure(inst.graph, p, cls);
            EXPECT_TRUE(report.all_hold()) << to_string(cls) << " " << inst.label << " "
                                           << report.first_violation()->claim;
        }
}

TEST(Wagon, OutOfClassViolationsCarryWitnesses)
{
    // Graphs with gems: whatever claim breaks must point at a forbidden subgraph.
    std::mt19937_64 rng(61);
    int violations = 0;
    for (int i = 0; i < 300; ++i) {
        auto g = random_graph(9, 0.55, rng);
        auto report = verify_structure(g, partition_of(g), GraphClass::gem_free);
        for (const auto & fact : report.facts) {
            if (fact.holds())
                continue;
            ++violations;
            ASSERT_TRUE(fact.violation->forbidden) << fact.claim;
            EXPECT_TRUE(verify_witness(g, *fact.violation->forbidden));
            EXPECT_TRUE(verify_certificate(g, fact.violation->evidence)) << fact.claim;
        }
    }
    EXPECT_GT(violations, 0);
}

TEST(Wagon, ReportLookup)
{
    auto g = cycle_graph(5);
    auto report = verify_structure(g, partition_of(g), GraphClass::gem_free);
    EXPECT_TRUE(report.all_hold());
    ASSERT_TRUE(report.find("v1_complete_to_m"));
    EXPECT_TRUE(report.find("v1_complete_to_m")->holds());
    EXPECT_EQ(report.find("no_such_claim"), nullptr);
    EXPECT_FALSE(report.first_violation());
}
