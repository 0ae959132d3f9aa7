// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include "brute.hpp"
#include "corpus.hpp"

#include <chibound/clique.hpp>
#include <chibound/cograph.hpp>
#include <chibound/colorers.hpp>
#include <chibound/detect.hpp>
#include <chibound/gen.hpp>
#include <chibound/oracle.hpp>
#include <chibound/perfection.hpp>
#include <chibound/wagon.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace chibound;

namespace {

// Fixed by the acceptance contract.
constexpr int grotzsch_colors = 4;
constexpr int samples_per_class = 200;
constexpr int grown_per_class = 100;
constexpr int min_n = 6;
constexpr int max_n = 14;
constexpr int cographs = 500;
constexpr int cograph_max_n = 40;
constexpr int cograph_oracle_n = 12;
constexpr int perfection_max_n = 12;
constexpr int detector_hosts = 100;
constexpr int detector_max_n = 9;
constexpr int oracle_graphs = 100;
constexpr int oracle_max_n = 10;

constexpr std::uint64_t corpus_seed = 20240601;

/// The bound written out independently of binding_bound.
auto expected_bound(GraphClass cls, int w) -> int
{
    if (w <= 1)
        return w;
    switch (cls) {
    case GraphClass::gem_free: return 3 * w - 2;
    case GraphClass::butterfly_free: return (w * w + 3 * w - 2) / 2;
    case GraphClass::diamond_free: return w == 2 ? 4 : w == 3 ? 7 : w == 4 ? 9 : 2 * w - 1;
    }
    return -1;
}

struct Outcome
{
    bool pass = true;
    std::ostringstream detail;
    std::ostringstream first_failure;

    void fail(const std::string & why)
    {
        if (pass)
            first_failure << why;
        pass = false;
    }
};

int failures = 0;

void report(int number, const std::string & title, const std::function<void(Outcome &)> & body)
{
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    }
    catch (const std::exception & e) {
        o.fail(std::string("exception: ") + e.what());
    }
    auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d %s: %s  %s (%.2fs)%s%s\n", number, title.c_str(), o.pass ? "PASS" : "FAIL",
        o.detail.str().c_str(), seconds, o.pass ? "" : "  first failure: ", o.first_failure.str().c_str());
    std::fflush(stdout);
    if (! o.pass)
        ++failures;
}

auto class_corpus(GraphClass cls) -> std::vector<corpus::Instance>
{
    auto all = corpus::sampled(cls, samples_per_class, corpus_seed);
    auto more = corpus::grown(cls, grown_per_class, corpus_seed + 100000);
    all.insert(all.end(), more.begin(), more.end());
    return all;
}

void grotzsch(Outcome & o)
{
    auto g = named_graph("grotzsch");
    auto member = is_in_class(g, forbidden_patterns(GraphClass::diamond_free)).member();
    auto colored = color_diamond_free(g);
    auto chi = chromatic_number(g).chi;
    o.detail << "member=" << member << " chi=" << chi;
    if (! member)
        o.fail("detector rejects the Grotzsch graph");
    if (! colored) {
        o.fail("colourer failed: " + colored.failure().claim);
        return;
    }
    o.detail << " colors_used=" << colored->coloring.colors_used;
    if (verify_coloring(g, colored->coloring))
        o.fail("improper colouring");
    if (colored->coloring.colors_used > grotzsch_colors)
        o.fail("more than 4 colours");
    if (chi != grotzsch_colors)
        o.fail("oracle chi is not 4");
    if (colored->coloring.colors_used != grotzsch_colors)
        o.fail("colors_used is not exactly 4");
}

void bounds(Outcome & o)
{
    for (auto cls : {GraphClass::gem_free, GraphClass::butterfly_free, GraphClass::diamond_free}) {
        auto graphs = class_corpus(cls);
        int checked = 0;
        int sampled = 0;
        int max_omega = 0;
        for (const auto & [label, g] : graphs) {
            if (g.order() < min_n || g.order() > max_n) {
                o.fail(label + ": order outside 6..14");
                continue;
            }
            if (! is_in_class(g, forbidden_patterns(cls)).member()) {
                o.fail(label + ": not a class member");
                continue;
            }
            auto colored = color_in_class(g, cls);
            if (! colored) {
                o.fail(label + ": " + std::string(to_string(cls)) + " colourer reported " + colored.failure().claim);
                continue;
            }
            const auto & c = colored->coloring;
            auto w = brute::clique_number(g);
            auto chi = chromatic_number(g).chi;
            max_omega = std::max(max_omega, w);
            if (! brute::is_proper(g, c.colors) || verify_coloring(g, c))
                o.fail(label + ": improper colouring");
            if (c.colors_used > expected_bound(cls, w))
                o.fail(label + ": " + std::to_string(c.colors_used) + " colours exceed the bound "
                    + std::to_string(expected_bound(cls, w)));
            if (c.bound != expected_bound(cls, w))
                o.fail(label + ": reported bound differs from the formula");
            if (c.colors_used < chi)
                o.fail(label + ": fewer colours than chi");
            if (label.starts_with("sampled"))
                ++sampled;
            ++checked;
        }
        if (sampled < samples_per_class)
            o.fail(std::string(to_string(cls)) + ": fewer than 200 sampled graphs checked");
        o.detail << to_string(cls) << "=" << checked << "(sampled " << sampled << ", max w " << max_omega << ") ";
    }
}

void arms(Outcome & o)
{
    static const std::vector<DiamondArm> required = {DiamondArm::omega2, DiamondArm::omega3,
        DiamondArm::omega4_small_q, DiamondArm::omega4_full_q_one_side, DiamondArm::omega4_full_q_both,
        DiamondArm::q_at_most_1, DiamondArm::q_2, DiamondArm::q_full, DiamondArm::q_mid};

    auto graphs = class_corpus(GraphClass::diamond_free);
    auto named = corpus::diamond_named();
    graphs.insert(graphs.end(), named.begin(), named.end());

    std::map<DiamondArm, int> hits;
    for (const auto & [label, g] : graphs) {
        if (! is_in_class(g, forbidden_patterns(GraphClass::diamond_free)).member()) {
            o.fail(label + ": not diamond-class member");
            continue;
        }
        auto colored = color_diamond_free(g);
        if (! colored) {
            o.fail(label + ": " + colored.failure().claim);
            continue;
        }
        ++hits[colored->arm.value_or(DiamondArm::trivial)];
    }
    for (auto arm : required) {
        o.detail << to_string(arm) << "=" << hits[arm] << " ";
        if (hits[arm] < 1)
            o.fail(std::string("arm ") + std::string(to_string(arm)) + " never fired");
    }
}

void claims(Outcome & o)
{
    int reports = 0;
    int facts = 0;
    for (auto cls : {GraphClass::gem_free, GraphClass::butterfly_free, GraphClass::diamond_free}) {
        auto graphs = class_corpus(cls);
        if (cls == GraphClass::diamond_free) {
            auto named = corpus::diamond_named();
            graphs.insert(graphs.end(), named.begin(), named.end());
        }
        for (const auto & [label, g] : graphs) {
            if (! is_in_class(g, forbidden_patterns(cls)).member())
                continue;
            auto partition = wagon_partition(g, max_clique(g));
            if (! partition) {
                o.fail(label + ": partition precondition failed");
                continue;
            }
            auto structure = verify_structure(g, partition.value(), cls);
            ++reports;
            facts += static_cast<int>(structure.facts.size());
            if (auto v = structure.first_violation())
                o.fail(label + " (" + std::string(to_string(cls)) + "): " + v->claim + " violated");
            auto colored = color_in_class(g, cls);
            if (! colored)
                o.fail(label + " (" + std::string(to_string(cls)) + "): colourer assertion " + colored.failure().claim);
        }
    }
    o.detail << "reports=" << reports << " facts=" << facts;
}

void cograph_engine(Outcome & o)
{
    int with_oracle = 0;
    for (int i = 0; i < cographs; ++i) {
        auto n = 1 + i % cograph_max_n;
        auto g = random_cograph(n, corpus_seed + static_cast<std::uint64_t>(i));
        auto label = "cograph n=" + std::to_string(n) + " #" + std::to_string(i);
        auto tree = cotree(g);
        if (! tree) {
            o.fail(label + ": recognition found a P4");
            continue;
        }
        if (evaluate(tree.value(), n) != g)
            o.fail(label + ": cotree evaluation differs");
        auto colored = color_cograph(g);
        if (! colored) {
            o.fail(label + ": colouring found a P4");
            continue;
        }
        if (verify_coloring(g, colored.value()))
            o.fail(label + ": improper colouring");
        if (colored->colors_used != clique_number(g))
            o.fail(label + ": colours differ from the clique number");
        if (n <= cograph_oracle_n) {
            ++with_oracle;
            if (colored->colors_used != chromatic_number(g).chi)
                o.fail(label + ": colours differ from oracle chi");
        }
    }
    o.detail << "cographs=" << cographs << " oracle-checked=" << with_oracle;
}

void perfection(Outcome & o)
{
    auto graphs = corpus::perfection_members();
    for (const auto & [label, g] : graphs) {
        if (g.order() > perfection_max_n) {
            o.fail(label + ": more than 12 vertices");
            continue;
        }
        if (! is_in_class(g, perfection_class()).member() || clique_number(g) < 5) {
            o.fail(label + ": outside the hypotheses");
            continue;
        }
        auto cert = certify_perfect(g);
        if (cert.conclusion != Conclusion::perfect)
            o.fail(label + ": certificate says " + std::string(to_string(cert.conclusion)) + " (" + cert.reason + ")");
        if (cert.c7)
            o.fail(label + ": C7 found");
        if (! exhaustive_perfection(g))
            o.fail(label + ": exhaustive check finds an imperfect subgraph");
        if (chromatic_number(g).chi != brute::clique_number(g))
            o.fail(label + ": chi differs from omega");
    }
    o.detail << "graphs=" << graphs.size();
}

void detectors(Outcome & o)
{
    std::vector<Pattern> all = {patterns::p2(), patterns::p3(), patterns::p4(), patterns::co_p2(),
        patterns::p2_union_p4(), patterns::diamond(), patterns::gem(), patterns::butterfly(), patterns::clique(3),
        patterns::clique(4), patterns::cycle(4), patterns::cycle(5), patterns::cycle(6), patterns::cycle(7)};
    std::mt19937_64 rng(corpus_seed);
    int present = 0;
    int absent = 0;
    for (int i = 0; i < detector_hosts; ++i) {
        auto n = 4 + i % (detector_max_n - 3);
        auto p = 0.15 + 0.7 * unit_draw(rng);
        auto g = random_graph(n, p, rng);
        for (const auto & pattern : all) {
            auto fast = find_induced(g, pattern);
            auto slow = brute::has_induced(g, pattern.graph);
            if (fast.has_value() != slow)
                o.fail("host #" + std::to_string(i) + " pattern " + pattern.name + ": detectors disagree");
            if (fast && ! verify_witness(g, *fast))
                o.fail("host #" + std::to_string(i) + " pattern " + pattern.name + ": witness does not verify");
            (slow ? present : absent) += 1;
        }
    }
    o.detail << "hosts=" << detector_hosts << " patterns=" << all.size() << " present=" << present
             << " absent=" << absent;
}

void oracle(Outcome & o)
{
    std::mt19937_64 rng(corpus_seed + 7);
    int bipartite = 0;
    for (int i = 0; i < oracle_graphs; ++i) {
        auto n = 1 + i % oracle_max_n;
        auto p = 0.1 + 0.8 * unit_draw(rng);
        auto g = random_graph(n, p, rng);
        auto label = "graph #" + std::to_string(i);
        auto fast = chromatic_number(g);
        auto slow = brute::chromatic_number(g);
        if (fast.chi != slow)
            o.fail(label + ": branch and bound " + std::to_string(fast.chi) + " vs k-sweep " + std::to_string(slow));
        if (! brute::is_proper(g, fast.witness.colors) || fast.witness.colors_used != fast.chi)
            o.fail(label + ": witness colouring is wrong");
        auto two = brute::is_bipartite(g);
        bipartite += two;
        if ((fast.chi <= 2) != two)
            o.fail(label + ": bipartite cross-check");
        if ((fast.chi == 2) != (two && g.edge_count() > 0))
            o.fail(label + ": chi = 2 cross-check");
    }
    auto c5 = chromatic_number(cycle_graph(5)).chi;
    auto c7 = chromatic_number(cycle_graph(7)).chi;
    if (c5 != 3 || c7 != 3)
        o.fail("odd cycles are not 3-chromatic");
    o.detail << "graphs=" << oracle_graphs << " bipartite=" << bipartite << " chi(C5)=" << c5 << " chi(C7)=" << c7;
}

}

auto main() -> int
{
    report(1, "Grotzsch tightness", grotzsch);
    report(2, "bound conformance by class", bounds);
    report(3, "diamond case coverage", arms);
    report(4, "structural claims", claims);
    report(5, "cograph engine", cograph_engine);
    report(6, "perfection", perfection);
    report(7, "detector oracle equivalence", detectors);
    report(8, "oracle self-consistency", oracle);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures;
}
