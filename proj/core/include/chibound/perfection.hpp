#pragma once

#include <chibound/detect.hpp>
#include <chibound/oracle.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace chibound {

enum class Conclusion
{
    perfect,
    not_applicable,
    refuted,
};

auto to_string(Conclusion conclusion) -> std::string_view;

/// Perfection certificate for (P2 u P4, diamond, C5)-free graphs with
/// clique number at least 5. Such a graph has no C7; with longer odd holes
/// and all odd antiholes excluded by the class, it is perfect by the strong
/// perfect graph theorem. The hole and antihole scans below corroborate
/// that at small sizes.
struct PerfectionCertificate
{
    int omega = 0;
    MembershipReport class_check;
    /// An induced C7, if one was found.
    std::optional<PatternWitness> c7;
    /// Odd hole of any length up to n.
    std::optional<PatternWitness> odd_hole;
    /// Odd antihole on at least 7 vertices, up to n.
    std::optional<PatternWitness> odd_antihole;
    Conclusion conclusion = Conclusion::not_applicable;
    /// Failed hypothesis, or what refuted the conclusion.
    std::string reason;
    /// An optimal colouring; present when the graph was certified and is
    /// within the oracle's size guard.
    std::optional<Coloring> coloring;
};

/// {P2uP4, diamond, C5}.
auto perfection_class() -> std::vector<Pattern>;

auto certify_perfect(const Graph & g, OracleOptions oracle = {}) -> PerfectionCertificate;

/// Whether every induced subgraph H has chi(H) = omega(H), by scanning all
/// vertex subsets. Throws SizeGuardExceeded above max_order.
auto exhaustive_perfection(const Graph & g, int max_order = 12) -> bool;

}
