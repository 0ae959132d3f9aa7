#pragma once

#include <chibound/certificate.hpp>
#include <chibound/clique.hpp>
#include <chibound/graph_class.hpp>
#include <chibound/result.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chibound {

/// Partition of V(G) anchored at a maximum clique A = v_0..v_{w-1}.
///
/// Indices are 0-based here. pair(i, j), i < j, holds the vertices outside A
/// for which (i, j) is the lexicographically least pair of non-neighbours in
/// A; single(a) holds the vertices adjacent to all of A except v_a.
class WagonPartition
{
public:
    WagonPartition() = default;
    WagonPartition(std::vector<Vertex> clique, int order);

    auto omega() const -> int { return static_cast<int>(clique_.size()); }
    auto clique() const -> const std::vector<Vertex> & { return clique_; }
    auto clique_set() const -> const VertexSet & { return clique_set_; }
    auto order() const -> int { return clique_set_.capacity(); }

    auto pair(int i, int j) const -> const VertexSet &;
    auto single(int a) const -> const VertexSet &;

    /// Position of (i, j) in lexicographic order.
    auto pair_index(int i, int j) const -> std::size_t;

private:
    friend auto wagon_partition(const Graph & g, const CliqueResult & a) -> Result<WagonPartition, StructureViolation>;

    std::vector<Vertex> clique_;
    VertexSet clique_set_;
    std::vector<VertexSet> pairs_;
    std::vector<VertexSet> singles_;
};

/// Fails with a clique certificate A + {x} when some x outside A is adjacent
/// to all of A. Throws std::invalid_argument when A is not a clique of g.
auto wagon_partition(const Graph & g, const CliqueResult & a) -> Result<WagonPartition, StructureViolation>;

/// One checked structural claim.
struct Fact
{
    std::string claim;
    std::string statement;
    std::optional<StructureViolation> violation;

    auto holds() const -> bool { return ! violation; }
};

struct StructureReport
{
    std::vector<Fact> facts;

    auto all_hold() const -> bool;
    auto find(std::string_view claim) const -> const Fact *;
    auto first_violation() const -> std::optional<StructureViolation>;
};

/// Checks every structural claim the class's colouring relies on, against
/// the concrete partition. Never throws for out-of-class inputs: failures are
/// report entries.
auto verify_structure(const Graph & g, const WagonPartition & partition, GraphClass cls) -> StructureReport;

}
