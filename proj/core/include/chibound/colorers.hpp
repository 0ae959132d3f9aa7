#pragma once

#include <chibound/certificate.hpp>
#include <chibound/coloring.hpp>
#include <chibound/graph_class.hpp>
#include <chibound/result.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chibound {

/// Which branch of the diamond-free construction ran. Q is a maximum clique
/// of the pair set C_{1,2}.
enum class DiamondArm
{
    trivial,                 // w <= 1
    omega2,
    omega3,
    omega4_small_q,          // w = 4, |Q| <= 3
    omega4_full_q_one_side,  // w = 4, |Q| = 4, C_{1,3} or C_{2,3} empty
    omega4_full_q_both,      // w = 4, |Q| = 4, both nonempty
    q_at_most_1,             // w >= 5
    q_2,
    q_full,
    q_mid,                   // w >= 5, 3 <= |Q| <= w - 1
};

auto to_string(DiamondArm arm) -> std::string_view;

struct ColorOptions
{
    /// Check class membership with the detectors before colouring.
    bool strict = false;
};

struct ClassColoring
{
    Coloring coloring;
    int omega = 0;
    std::optional<DiamondArm> arm;
    /// Structural claims asserted (and found to hold) on the way.
    std::vector<std::string> claims;
};

using ColorResult = Result<ClassColoring, StructureViolation>;

/// At most 3w - 2 colours on a (P2 u P4, gem)-free graph.
auto color_gem_free(const Graph & g, ColorOptions options = {}) -> ColorResult;
/// At most (w^2 + 3w - 2) / 2 colours on a (P2 u P4, butterfly)-free graph.
auto color_butterfly_free(const Graph & g, ColorOptions options = {}) -> ColorResult;
/// At most 4, 7, 9 or 2w - 1 colours on a (P2 u P4, diamond)-free graph.
auto color_diamond_free(const Graph & g, ColorOptions options = {}) -> ColorResult;

auto color_in_class(const Graph & g, GraphClass cls, ColorOptions options = {}) -> ColorResult;

}
