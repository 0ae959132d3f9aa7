#include "structure.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace chibound::detail {

namespace {

auto just(int order, Vertex v) -> VertexSet
{
    VertexSet s(order);
    s.insert(v);
    return s;
}

/// Union of every pair set whose index pair satisfies `keep`.
template <typename Keep>
auto pairs_where(const WagonPartition & p, Keep keep) -> VertexSet
{
    VertexSet result(p.order());
    for (int i = 0; i < p.omega(); ++i)
        for (int j = i + 1; j < p.omega(); ++j)
            if (keep(i, j))
                result |= p.pair(i, j);
    return result;
}

auto first_violating_pair(const WagonPartition & p, int min_j, auto check) -> Evidence
{
    for (int i = 0; i < p.omega(); ++i)
        for (int j = std::max(i + 1, min_j); j < p.omega(); ++j)
            if (auto e = check(p.pair(i, j)))
                return e;
    return std::nullopt;
}

/// Splits a side by its neighbourhood in Q = {q1, q2}: sees only q1, only
/// q2, both, neither.
auto split_by_two(const Graph & g, const VertexSet & side, Vertex q1, Vertex q2) -> std::array<VertexSet, 4>
{
    std::array<VertexSet, 4> classes{VertexSet(g.order()), VertexSet(g.order()), VertexSet(g.order()),
        VertexSet(g.order())};
    for (auto x : side) {
        auto a = g.adjacent(x, q1);
        auto b = g.adjacent(x, q2);
        classes[a && b ? 2 : a ? 0 : b ? 1 : 3].insert(x);
    }
    return classes;
}

/// Complete to Q, exactly one neighbour in Q, anticomplete to Q. Vertices
/// with any other count are left out and reported by the trichotomy check.
auto split_by_many(const Graph & g, const VertexSet & side, const VertexSet & q) -> std::array<VertexSet, 4>
{
    std::array<VertexSet, 4> classes{VertexSet(g.order()), VertexSet(g.order()), VertexSet(g.order()),
        VertexSet(g.order())};
    for (auto x : side) {
        auto seen = (g.neighbors(x) & q).size();
        if (seen == q.size())
            classes[0].insert(x);
        else if (seen == 1)
            classes[1].insert(x);
        else if (seen == 0)
            classes[2].insert(x);
    }
    return classes;
}

/// A vertex with 2 <= |N(x) & Q| < |Q| gives a diamond x, u, v, y with
/// u, v seen and y unseen.
auto partial_neighbor(const Graph & g, const VertexSet & side, const VertexSet & q) -> Evidence
{
    for (auto x : side) {
        auto seen = g.neighbors(x) & q;
        if (seen.size() < 2 || seen.size() == q.size())
            continue;
        auto u = seen.first();
        auto v = seen.next(u);
        auto y = (q - seen).first();
        return witness("diamond", {x, u, v, y});
    }
    return std::nullopt;
}

}

auto check_partition_basics(ClaimChecker & checker, const WagonPartition & p) -> bool
{
    const auto & g = checker.graph();
    auto p4 = first_violating_pair(p, 0, [&](const VertexSet & s) { return p4_in(g, s); });
    auto ok = checker.record("pair_sets_p4_free", "every pair set C_{i,j} induces a P4-free graph", std::move(p4));

    Evidence edge;
    for (int a = 0; a < p.omega() && ! edge; ++a)
        edge = edge_in(g, p.single(a));
    return checker.record("single_sets_stable", "every single set I_a is stable", std::move(edge)) && ok;
}

auto gem_sets(const WagonPartition & p) -> GemSets
{
    auto n = p.order();
    GemSets sets{VertexSet(n), VertexSet(n)};
    if (p.omega() == 0)
        return sets;

    for (int k = 1; k < p.omega(); ++k) {
        sets.m |= p.single(k);
        sets.m.insert(p.clique()[static_cast<std::size_t>(k)]);
    }
    sets.m |= pairs_where(p, [](int i, int) { return i >= 1; });
    sets.n |= p.single(0);
    sets.n |= pairs_where(p, [](int i, int j) { return i == 0 && j >= 2; });
    return sets;
}

auto check_gem(ClaimChecker & checker, const WagonPartition & p) -> bool
{
    if (p.omega() < 2)
        return true;
    const auto & g = checker.graph();
    auto n = p.order();
    auto [m, nn] = gem_sets(p);
    auto v1 = just(n, p.clique()[0]);
    auto v2 = just(n, p.clique()[1]);

    auto ok = checker.record("v1_complete_to_m", "v1 is complete to M", non_edge_between(g, v1, m));
    ok = checker.record("v2_complete_to_n", "v2 is complete to N", non_edge_between(g, v2, nn)) && ok;
    ok = checker.record("m_and_n_p4_free", "G[M] and G[N] are P4-free", first_of(p4_in(g, m), p4_in(g, nn))) && ok;
    return ok;
}

auto check_butterfly(ClaimChecker & checker, const WagonPartition & p) -> bool
{
    const auto & g = checker.graph();
    auto edge = first_violating_pair(p, 2, [&](const VertexSet & s) { return edge_in(g, s); });
    return checker.record("late_pair_sets_stable", "C_{i,j} is stable for j >= 3", std::move(edge));
}

auto check_diamond_class(ClaimChecker & checker, const WagonPartition & p) -> bool
{
    const auto & g = checker.graph();
    auto w = p.omega();
    auto n = p.order();
    auto ok = true;

    if (w >= 4) {
        auto late = first_violating_pair(p, 3, [](const VertexSet & s) { return member_of(s); });
        ok = checker.record("late_pair_sets_empty", "C_{i,j} is empty for j >= 4", std::move(late)) && ok;
    }
    if (w >= 3) {
        Evidence any;
        for (int a = 0; a < w && ! any; ++a)
            any = member_of(p.single(a));
        ok = checker.record("single_sets_empty", "I_a is empty when w >= 3", std::move(any)) && ok;

        auto v1 = just(n, p.clique()[0]);
        auto v2 = just(n, p.clique()[1]);
        const auto & c13 = p.pair(0, 2);
        const auto & c23 = p.pair(1, 2);
        ok = checker.record("v2_complete_to_c13_v1_complete_to_c23", "v2 is complete to C_{1,3} and v1 to C_{2,3}",
                 first_of(non_edge_between(g, v2, c13), non_edge_between(g, v1, c23)))
            && ok;
        ok = checker.record("c13_c23_clique_bound", "C_{1,3} and C_{2,3} have clique number at most w - 1",
                 first_of(clique_above(g, c13, w - 1), clique_above(g, c23, w - 1)))
            && ok;
        ok = checker.record("c13_c23_anticomplete_to_rest_of_clique",
                 "C_{1,3} misses A - {v2} and C_{2,3} misses A - {v1}",
                 first_of(edge_between(g, c13, p.clique_set() - v2), edge_between(g, c23, p.clique_set() - v1)))
            && ok;
    }
    if (w >= 2)
        ok = checker.record("c12_at_most_one_clique_neighbor", "each C_{1,2} vertex has at most one neighbour in A",
                 two_neighbors_in(g, p.pair(0, 1), p.clique_set()))
            && ok;
    return ok;
}

auto analyze_diamond_case(ClaimChecker & checker, const WagonPartition & p) -> std::optional<DiamondCase>
{
    const auto & g = checker.graph();
    auto w = p.omega();
    auto n = p.order();

    DiamondCase dc;
    if (w <= 1)
        return dc;
    if (w == 2) {
        dc.arm = DiamondArm::omega2;
        return dc;
    }
    if (w == 3) {
        dc.arm = DiamondArm::omega3;
        return dc;
    }

    const auto & c12 = p.pair(0, 1);
    dc.q = max_clique_within(g, c12);
    VertexSet q(n, std::span<const Vertex>(dc.q.members));
    checker.add_context(q);
    dc.one = Side{p.pair(0, 2), 0, {VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)}};
    dc.two = Side{p.pair(1, 2), 1, {VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)}};
    auto size = dc.q.size();

    if (w == 4) {
        if (size <= 3) {
            dc.arm = DiamondArm::omega4_small_q;
            return dc;
        }
        if (dc.one.set.empty() || dc.two.set.empty()) {
            dc.arm = DiamondArm::omega4_full_q_one_side;
            if (! dc.two.set.empty())
                std::swap(dc.one, dc.two);
            return dc;
        }
        dc.arm = DiamondArm::omega4_full_q_both;
        auto ok = checker.record("c13_complete_to_c23", "C_{1,3} is complete to C_{2,3}",
            non_edge_between(g, dc.one.set, dc.two.set));
        ok = checker.record("c13_c23_stable", "C_{1,3} and C_{2,3} are stable",
                 first_of(edge_in(g, dc.one.set), edge_in(g, dc.two.set)))
            && ok;
        return ok ? std::optional(dc) : std::nullopt;
    }

    if (size <= 1) {
        dc.arm = DiamondArm::q_at_most_1;
        return dc;
    }

    if (size == 2) {
        dc.arm = DiamondArm::q_2;
        auto q1 = dc.q.members[0];
        auto q2 = dc.q.members[1];
        dc.one.classes = split_by_two(g, dc.one.set, q1, q2);
        dc.two.classes = split_by_two(g, dc.two.set, q1, q2);

        auto stable = [&](const Side & s) {
            return first_of(edge_in(g, s.classes[0]), edge_in(g, s.classes[1]), edge_in(g, s.classes[2]));
        };
        auto apart = [&](const Side & s) {
            return edge_between(g, s.classes[0] | s.classes[1], s.classes[2]);
        };
        if (! checker.record("q2_classes_stable", "the classes seeing q1 only, q2 only, or both are stable",
                first_of(stable(dc.one), stable(dc.two))))
            return std::nullopt;
        if (! checker.record("q2_classes_anticomplete",
                "the classes seeing one vertex of Q miss the class seeing both", first_of(apart(dc.one), apart(dc.two))))
            return std::nullopt;
        if (! checker.record("q2_one_unseen_class_empty", "one side has no vertex anticomplete to Q",
                pair_across(g, dc.one.classes[3], dc.two.classes[3])))
            return std::nullopt;
        if (! dc.two.classes[3].empty())
            std::swap(dc.one, dc.two);

        if (! checker.record("q2_first_color_class_stable",
                "on each side the vertices seeing q1, with or without q2, form a stable set",
                first_of(edge_in(g, dc.one.classes[0] | dc.one.classes[2]),
                    edge_in(g, dc.two.classes[0] | dc.two.classes[2]))))
            return std::nullopt;
        if (! checker.record("q2_unseen_components_cliques", "the vertices anticomplete to Q induce disjoint cliques",
                p3_in(g, dc.one.classes[3])))
            return std::nullopt;

        auto seen = dc.one.classes[0] | dc.one.classes[1] | dc.one.classes[2];
        Evidence touching;
        for (const auto & comp : components(g, dc.one.classes[3]))
            if (comp.size() >= w - 1 && ! touching)
                touching = edge_between(g, comp, seen);
        if (! checker.record("q2_large_components_isolated",
                "an unseen clique on w - 1 vertices misses the rest of its side", std::move(touching)))
            return std::nullopt;
        return dc;
    }

    if (size == w) {
        dc.arm = DiamondArm::q_full;
        if (! checker.record("qfull_one_side_empty", "C_{1,3} or C_{2,3} is empty",
                pair_across(g, dc.one.set, dc.two.set)))
            return std::nullopt;
        if (! dc.two.set.empty())
            std::swap(dc.one, dc.two);
        return dc;
    }

    dc.arm = DiamondArm::q_mid;
    if (! checker.record("qmid_trichotomy", "each C_{i,3} vertex sees none, one or all of Q",
            first_of(partial_neighbor(g, dc.one.set, q), partial_neighbor(g, dc.two.set, q))))
        return std::nullopt;
    dc.one.classes = split_by_many(g, dc.one.set, q);
    dc.two.classes = split_by_many(g, dc.two.set, q);

    auto stable = [&](const Side & s) { return first_of(edge_in(g, s.classes[0]), edge_in(g, s.classes[1])); };
    if (! checker.record("qmid_classes_stable", "the classes complete to Q and seeing one vertex of Q are stable",
            first_of(stable(dc.one), stable(dc.two))))
        return std::nullopt;
    if (! checker.record("qmid_classes_anticomplete", "the class complete to Q misses the class seeing one vertex",
            first_of(edge_between(g, dc.one.classes[0], dc.one.classes[1]),
                edge_between(g, dc.two.classes[0], dc.two.classes[1]))))
        return std::nullopt;
    if (! checker.record("qmid_one_unseen_class_empty", "one side has no vertex anticomplete to Q",
            pair_across(g, dc.one.classes[2], dc.two.classes[2])))
        return std::nullopt;
    if (! dc.two.classes[2].empty())
        std::swap(dc.one, dc.two);
    if (! checker.record("qmid_c12_anticomplete_to_unseen", "C_{1,2} misses the vertices anticomplete to Q",
            edge_between(g, c12, dc.one.classes[2])))
        return std::nullopt;
    return dc;
}

}
