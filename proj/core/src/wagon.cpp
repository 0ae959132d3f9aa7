#include <chibound/wagon.hpp>

#include "claims.hpp"
#include "structure.hpp"

#include <stdexcept>

namespace chibound {

WagonPartition::WagonPartition(std::vector<Vertex> clique, int order) :
    clique_(std::move(clique)), clique_set_(order, std::span<const Vertex>(clique_))
{
    auto w = omega();
    pairs_.assign(static_cast<std::size_t>(w * (w - 1) / 2), VertexSet(order));
    singles_.assign(static_cast<std::size_t>(w), VertexSet(order));
}

auto WagonPartition::pair_index(int i, int j) const -> std::size_t
{
    auto w = omega();
    if (i < 0 || j <= i || j >= w)
        throw std::out_of_range("no pair set for (" + std::to_string(i) + "," + std::to_string(j) + ")");
    // Pairs (0, *) come first, w - 1 of them, then (1, *), and so on.
    return static_cast<std::size_t>(i * (2 * w - i - 1) / 2 + (j - i - 1));
}

auto WagonPartition::pair(int i, int j) const -> const VertexSet &
{
    return pairs_[pair_index(i, j)];
}

auto WagonPartition::single(int a) const -> const VertexSet &
{
    if (a < 0 || a >= omega())
        throw std::out_of_range("no single set for " + std::to_string(a));
    return singles_[static_cast<std::size_t>(a)];
}

auto wagon_partition(const Graph & g, const CliqueResult & a) -> Result<WagonPartition, StructureViolation>
{
    WagonPartition partition(a.members, g.order());
    if (! is_clique(g, partition.clique_set()) || partition.clique_set().size() != a.size())
        throw std::invalid_argument("partition anchor is not a clique of the graph");

    auto w = partition.omega();
    for (auto x : g.vertices() - partition.clique_set()) {
        int first_miss = -1;
        int second_miss = -1;
        for (int k = 0; k < w && second_miss == -1; ++k) {
            if (g.adjacent(x, a.members[static_cast<std::size_t>(k)]))
                continue;
            if (first_miss == -1)
                first_miss = k;
            else
                second_miss = k;
        }

        if (second_miss != -1)
            partition.pairs_[partition.pair_index(first_miss, second_miss)].insert(x);
        else if (first_miss != -1)
            partition.singles_[static_cast<std::size_t>(first_miss)].insert(x);
        else {
            auto bigger = a.members;
            bigger.push_back(x);
            return StructureViolation{"anchor_is_maximum", "no vertex outside A is adjacent to all of A",
                CliqueCertificate{std::move(bigger)}, std::nullopt};
        }
    }
    return partition;
}

auto StructureReport::all_hold() const -> bool
{
    for (const auto & f : facts)
        if (! f.holds())
            return false;
    return true;
}

auto StructureReport::find(std::string_view claim) const -> const Fact *
{
    for (const auto & f : facts)
        if (f.claim == claim)
            return &f;
    return nullptr;
}

auto StructureReport::first_violation() const -> std::optional<StructureViolation>
{
    for (const auto & f : facts)
        if (f.violation)
            return f.violation;
    return std::nullopt;
}

auto verify_structure(const Graph & g, const WagonPartition & partition, GraphClass cls) -> StructureReport
{
    detail::ClaimChecker checker(g, forbidden_patterns(cls));
    checker.add_context(partition.clique_set());
    detail::check_partition_basics(checker, partition);

    switch (cls) {
    case GraphClass::gem_free:
        detail::check_gem(checker, partition);
        break;
    case GraphClass::butterfly_free:
        detail::check_butterfly(checker, partition);
        break;
    case GraphClass::diamond_free:
        if (detail::check_diamond_class(checker, partition))
            detail::analyze_diamond_case(checker, partition);
        break;
    }
    return StructureReport{checker.facts()};
}

}
