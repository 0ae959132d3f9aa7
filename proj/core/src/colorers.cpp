#include <chibound/colorers.hpp>

#include <chibound/clique.hpp>
#include <chibound/cograph.hpp>
#include <chibound/wagon.hpp>

#include "claims.hpp"
#include "structure.hpp"

#include <numeric>
#include <stdexcept>

namespace chibound {

auto to_string(DiamondArm arm) -> std::string_view
{
    switch (arm) {
    case DiamondArm::trivial: return "trivial";
    case DiamondArm::omega2: return "omega2";
    case DiamondArm::omega3: return "omega3";
    case DiamondArm::omega4_small_q: return "omega4_small_q";
    case DiamondArm::omega4_full_q_one_side: return "omega4_full_q_one_side";
    case DiamondArm::omega4_full_q_both: return "omega4_full_q_both";
    case DiamondArm::q_at_most_1: return "q_at_most_1";
    case DiamondArm::q_2: return "q_2";
    case DiamondArm::q_full: return "q_full";
    case DiamondArm::q_mid: return "q_mid";
    }
    return "unknown";
}

namespace {

using detail::ClaimChecker;

auto scheme_of(GraphClass cls) -> Scheme
{
    switch (cls) {
    case GraphClass::gem_free: return Scheme::gem_free;
    case GraphClass::butterfly_free: return Scheme::butterfly_free;
    case GraphClass::diamond_free: return Scheme::diamond_free;
    }
    return Scheme::exact;
}

/// lo, lo + 1, ..., hi.
auto span_of(int lo, int hi) -> std::vector<int>
{
    std::vector<int> result;
    for (int c = lo; c <= hi; ++c)
        result.push_back(c);
    return result;
}

auto joined(std::vector<int> a, const std::vector<int> & b) -> std::vector<int>
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

class Painter
{
public:
    explicit Painter(ClaimChecker & checker) :
        checker_(checker), g_(checker.graph()), raw_(static_cast<std::size_t>(checker.graph().order()), -1)
    {
    }

    void paint(Vertex v, int c) { raw_[static_cast<std::size_t>(v)] = c; }

    void paint(const VertexSet & s, int c)
    {
        for (auto v : s)
            paint(v, c);
    }

    /// Optimally colours G[s] as a cograph and maps colour k to palette[k].
    /// A P4 or a clique larger than the palette is recorded as a violation.
    auto piece(const VertexSet & s, const std::vector<int> & palette, const std::string & what) -> bool
    {
        if (s.empty())
            return true;
        auto coloured = color_cograph_within(g_, s);
        if (! coloured) {
            checker_.record("piece_p4_free", what + " induces a P4-free graph", Certificate{coloured.failure()});
            return false;
        }
        auto size = static_cast<int>(palette.size());
        if (coloured->width > size) {
            auto evidence = detail::clique_above(g_, s, size);
            if (! evidence)
                throw std::logic_error("cograph colouring wider than the clique number of " + what);
            checker_.record("piece_fits_palette",
                what + " has clique number at most " + std::to_string(size), std::move(evidence));
            return false;
        }
        for (auto v : s)
            paint(v, palette[static_cast<std::size_t>(coloured->colors[static_cast<std::size_t>(v)])]);
        return true;
    }

    auto raw() const -> const std::vector<int> & { return raw_; }

private:
    ClaimChecker & checker_;
    const Graph & g_;
    std::vector<int> raw_;
};

auto failed(const ClaimChecker & checker) -> ColorResult
{
    if (auto v = checker.first_violation())
        return std::move(*v);
    throw std::logic_error("a claim failed without recording a violation");
}

auto finish(ClaimChecker & checker, const std::vector<int> & raw, GraphClass cls, int omega,
    std::optional<DiamondArm> arm) -> ColorResult
{
    for (auto c : raw)
        if (c < 0)
            throw std::logic_error("the construction left a vertex uncoloured");

    auto bound = binding_bound(cls, omega);
    auto coloring = compact(raw, bound, scheme_of(cls));
    if (auto bad = verify_coloring(checker.graph(), coloring)) {
        checker.record("proper_coloring", "the construction yields a proper colouring",
            detail::witness("P2", {bad->u, bad->v}));
        auto violation = checker.first_violation();
        if (! violation->forbidden)
            throw std::logic_error("improper colouring on an input with no forbidden subgraph");
        return std::move(*violation);
    }
    if (coloring.colors_used > bound)
        throw std::logic_error("colouring uses " + std::to_string(coloring.colors_used) + " colours, bound is "
            + std::to_string(bound));
    return ClassColoring{std::move(coloring), omega, arm, checker.held_claims()};
}

/// State shared by the three constructions up to the class-specific part.
struct Start
{
    ClaimChecker checker;
    WagonPartition partition;
};

auto start(const Graph & g, GraphClass cls, ColorOptions options) -> Result<Start, StructureViolation>
{
    if (options.strict) {
        auto report = is_in_class(g, forbidden_patterns(cls));
        if (auto w = report.first_witness())
            return StructureViolation{"class_membership",
                "the input has no induced " + w->pattern, Certificate{*w}, *w};
    }

    auto partition = wagon_partition(g, max_clique(g));
    if (! partition)
        return partition.failure();

    Start s{ClaimChecker(g, forbidden_patterns(cls)), std::move(partition).value()};
    s.checker.add_context(s.partition.clique_set());
    return s;
}

/// At w <= 1 the graph is edgeless.
auto trivial(ClaimChecker & checker, GraphClass cls, int omega, std::optional<DiamondArm> arm) -> ColorResult
{
    std::vector<int> raw(static_cast<std::size_t>(checker.graph().order()), 0);
    return finish(checker, raw, cls, omega, arm);
}

void paint_clique(Painter & painter, const WagonPartition & p)
{
    for (int k = 0; k < p.omega(); ++k)
        painter.paint(p.clique()[static_cast<std::size_t>(k)], k);
}

}

auto color_gem_free(const Graph & g, ColorOptions options) -> ColorResult
{
    auto started = start(g, GraphClass::gem_free, options);
    if (! started)
        return started.failure();
    auto s = std::move(started).value();
    auto & checker = s.checker;
    const auto & p = s.partition;
    auto w = p.omega();

    if (w <= 1)
        return trivial(checker, GraphClass::gem_free, w, std::nullopt);
    auto basics = detail::check_partition_basics(checker, p);
    if (! detail::check_gem(checker, p) || ! basics)
        return failed(checker);

    Painter painter(checker);
    auto [m, n] = detail::gem_sets(p);
    auto ok = painter.piece(m, span_of(0, w - 2), "M") && painter.piece(n, span_of(w - 1, 2 * w - 3), "N")
        && painter.piece(p.pair(0, 1), span_of(2 * w - 2, 3 * w - 3), "C_{1,2}");
    if (! ok)
        return failed(checker);
    painter.paint(p.clique()[0], w - 1);
    return finish(checker, painter.raw(), GraphClass::gem_free, w, std::nullopt);
}

auto color_butterfly_free(const Graph & g, ColorOptions options) -> ColorResult
{
    auto started = start(g, GraphClass::butterfly_free, options);
    if (! started)
        return started.failure();
    auto s = std::move(started).value();
    auto & checker = s.checker;
    const auto & p = s.partition;
    auto w = p.omega();

    if (w <= 1)
        return trivial(checker, GraphClass::butterfly_free, w, std::nullopt);
    auto basics = detail::check_partition_basics(checker, p);
    if (! detail::check_butterfly(checker, p) || ! basics)
        return failed(checker);

    Painter painter(checker);
    paint_clique(painter, p);
    for (int a = 0; a < w; ++a)
        painter.paint(p.single(a), a);
    if (! painter.piece(p.pair(0, 1), span_of(w, 2 * w - 1), "C_{1,2}"))
        return failed(checker);
    auto fresh = 2 * w;
    for (int i = 0; i < w; ++i)
        for (int j = std::max(i + 1, 2); j < w; ++j)
            painter.paint(p.pair(i, j), fresh++);
    return finish(checker, painter.raw(), GraphClass::butterfly_free, w, std::nullopt);
}

auto color_diamond_free(const Graph & g, ColorOptions options) -> ColorResult
{
    auto started = start(g, GraphClass::diamond_free, options);
    if (! started)
        return started.failure();
    auto s = std::move(started).value();
    auto & checker = s.checker;
    const auto & p = s.partition;
    auto w = p.omega();

    if (w <= 1)
        return trivial(checker, GraphClass::diamond_free, w, DiamondArm::trivial);
    auto basics = detail::check_partition_basics(checker, p);
    if (! detail::check_diamond_class(checker, p) || ! basics)
        return failed(checker);
    auto found = detail::analyze_diamond_case(checker, p);
    if (! found)
        return failed(checker);
    const auto & dc = *found;

    Painter painter(checker);
    paint_clique(painter, p);
    const auto & c12 = p.pair(0, 1);
    auto ok = true;

    switch (dc.arm) {
    case DiamondArm::trivial:
        break;
    case DiamondArm::omega2:
        painter.paint(p.single(0), 0);
        painter.paint(p.single(1), 1);
        ok = painter.piece(c12, {2, 3}, "C_{1,2}");
        break;
    case DiamondArm::omega3:
        ok = painter.piece(c12, {0, 1, 3}, "C_{1,2}") && painter.piece(p.pair(1, 2), {2, 4}, "C_{2,3}")
            && painter.piece(p.pair(0, 2), {5, 6}, "C_{1,3}");
        break;
    case DiamondArm::omega4_small_q:
        ok = painter.piece(c12, {0, 1, 4}, "C_{1,2}") && painter.piece(p.pair(0, 2), {2, 3, 5}, "C_{1,3}")
            && painter.piece(p.pair(1, 2), {6, 7, 8}, "C_{2,3}");
        break;
    case DiamondArm::omega4_full_q_one_side:
        ok = painter.piece(c12, {0, 1, 4, 5}, "C_{1,2}") && painter.piece(dc.one.set, {2, 3, 6}, "C_{i,3}");
        break;
    case DiamondArm::omega4_full_q_both:
        ok = painter.piece(c12, {0, 1, 4, 5}, "C_{1,2}");
        painter.paint(dc.one.set, 2);
        painter.paint(dc.two.set, 3);
        break;
    case DiamondArm::q_at_most_1:
        painter.paint(c12, 1);
        ok = painter.piece(p.pair(0, 2), joined({0}, span_of(2, w - 1)), "C_{1,3}")
            && painter.piece(p.pair(1, 2), span_of(w, 2 * w - 2), "C_{2,3}");
        break;
    case DiamondArm::q_2: {
        const auto & one = dc.one;
        const auto & two = dc.two;
        painter.paint(one.classes[0] | one.classes[2], one.anchor);
        painter.paint(one.classes[1], 2);
        painter.paint(two.classes[0] | two.classes[2], two.anchor);
        painter.paint(two.classes[1], 3);
        auto small = joined(span_of(4, w - 1), {w, w + 1});
        auto large = joined(joined({one.anchor, 2}, span_of(4, w - 1)), {w});
        for (const auto & comp : components(g, one.classes[3]))
            ok = ok && painter.piece(comp, comp.size() <= w - 2 ? small : large, "an unseen clique");
        ok = ok && painter.piece(c12, {w + 2, w + 3}, "C_{1,2}");
        break;
    }
    case DiamondArm::q_full:
        ok = painter.piece(dc.one.set, joined({dc.one.anchor}, span_of(2, w - 1)), "C_{i,3}")
            && painter.piece(c12, joined({dc.two.anchor}, span_of(w, 2 * w - 2)), "C_{1,2}");
        break;
    case DiamondArm::q_mid:
        painter.paint(dc.one.classes[0] | dc.one.classes[1], dc.one.anchor);
        painter.paint(dc.two.classes[0] | dc.two.classes[1], dc.two.anchor);
        ok = painter.piece(c12 | dc.one.classes[2], span_of(w, 2 * w - 2), "C_{1,2} with the unseen class");
        break;
    }
    if (! ok)
        return failed(checker);
    return finish(checker, painter.raw(), GraphClass::diamond_free, w, dc.arm);
}

auto color_in_class(const Graph & g, GraphClass cls, ColorOptions options) -> ColorResult
{
    switch (cls) {
    case GraphClass::gem_free: return color_gem_free(g, options);
    case GraphClass::butterfly_free: return color_butterfly_free(g, options);
    case GraphClass::diamond_free: return color_diamond_free(g, options);
    }
    throw std::invalid_argument("unknown graph class");
}

}
