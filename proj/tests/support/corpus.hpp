#pragma once

#include <chibound/gen.hpp>
#include <chibound/graph_class.hpp>

#include <string>
#include <vector>

namespace chibound::corpus {

struct Instance
{
    std::string label;
    Graph graph;
};

/// Rejection-sampled members at the class's default density, n cycling
/// through 6..14.
auto sampled(GraphClass cls, int count, std::uint64_t seed) -> std::vector<Instance>;

/// Denser members grown vertex by vertex, n cycling through 6..14.
auto grown(GraphClass cls, int count, std::uint64_t seed) -> std::vector<Instance>;

/// Named and hand-built diamond-free graphs reaching every branch of the
/// diamond construction.
auto diamond_named() -> std::vector<Instance>;

/// A diamond-free graph with w = 4 whose pair set C_{1,2} holds a K4 while
/// C_{1,3} and C_{2,3} are both nonempty.
auto omega4_both_sides() -> Graph;

/// (P2 u P4, diamond, C5)-free graphs with w >= 5 and n <= 12.
auto perfection_members() -> std::vector<Instance>;

auto disjoint_cliques(const std::vector<int> & sizes) -> Graph;

}
