#pragma once

#include <chibound/detect.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace chibound {

/// A set of pairwise adjacent vertices; used to show that a supposed
/// maximum clique is not maximum.
struct CliqueCertificate
{
    std::vector<Vertex> members;

    auto operator==(const CliqueCertificate &) const -> bool = default;
};

using Certificate = std::variant<PatternWitness, CliqueCertificate>;

auto verify_certificate(const Graph & g, const Certificate & certificate) -> bool;
auto describe(const Certificate & certificate) -> std::string;

/// A structural claim that failed on a concrete input.
///
/// `evidence` is the direct counterexample to the claim (an edge inside a set
/// that should be stable, a vertex in a set that should be empty, ...).
/// `forbidden`, when present, is an induced copy of one of the class's
/// forbidden graphs, which proves the input lies outside the class. A
/// violation on an in-class input has no `forbidden` witness and signals a
/// bug.
struct StructureViolation
{
    std::string claim;
    std::string statement;
    Certificate evidence;
    std::optional<PatternWitness> forbidden;
};

}
