#pragma once

#include "claims.hpp"

#include <chibound/clique.hpp>
#include <chibound/colorers.hpp>
#include <chibound/wagon.hpp>

#include <array>
#include <optional>

namespace chibound::detail {

/// Every pair set induces a P4-free graph; every single set is stable.
auto check_partition_basics(ClaimChecker & checker, const WagonPartition & p) -> bool;

/// M = all of A but v1 plus every single and pair set that does not miss v1;
/// N = the single set of v1 plus the pair sets C_{1,j}, j >= 3.
struct GemSets
{
    VertexSet m;
    VertexSet n;
};

auto gem_sets(const WagonPartition & p) -> GemSets;
auto check_gem(ClaimChecker & checker, const WagonPartition & p) -> bool;
auto check_butterfly(ClaimChecker & checker, const WagonPartition & p) -> bool;
/// Claims that hold for every diamond-free member regardless of the case.
auto check_diamond_class(ClaimChecker & checker, const WagonPartition & p) -> bool;

/// One of C_{1,3}, C_{2,3} in the role it plays after symmetry breaking.
struct Side
{
    VertexSet set;
    /// Clique index whose vertex misses the whole side; its colour is reused.
    int anchor = 0;
    /// Classes by neighbourhood in Q; meaning depends on the arm.
    std::array<VertexSet, 4> classes;
};

struct DiamondCase
{
    DiamondArm arm = DiamondArm::trivial;
    CliqueResult q;
    /// After the swap, `two` is the side the case requires to be (partly) empty.
    Side one;
    Side two;
};

/// Determines the arm and checks the arm's claims. Nothing when a claim
/// fails; the checker holds the violation.
auto analyze_diamond_case(ClaimChecker & checker, const WagonPartition & p) -> std::optional<DiamondCase>;

}
