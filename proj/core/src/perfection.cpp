#include <chibound/perfection.hpp>

#include <chibound/clique.hpp>

namespace chibound {

auto to_string(Conclusion conclusion) -> std::string_view
{
    switch (conclusion) {
    case Conclusion::perfect: return "perfect";
    case Conclusion::not_applicable: return "not_applicable";
    case Conclusion::refuted: return "refuted";
    }
    return "unknown";
}

auto perfection_class() -> std::vector<Pattern>
{
    return {patterns::p2_union_p4(), patterns::diamond(), patterns::cycle(5)};
}

auto certify_perfect(const Graph & g, OracleOptions oracle) -> PerfectionCertificate
{
    PerfectionCertificate cert;
    cert.omega = clique_number(g);
    cert.class_check = is_in_class(g, perfection_class());

    if (auto w = cert.class_check.first_witness()) {
        cert.reason = "contains an induced " + w->pattern;
        return cert;
    }
    if (cert.omega < 5) {
        cert.reason = "clique number " + std::to_string(cert.omega) + " is below 5";
        return cert;
    }

    cert.c7 = find_induced(g, patterns::cycle(7));
    cert.odd_hole = find_odd_hole(g, g.order());
    cert.odd_antihole = find_odd_antihole(g, g.order());

    if (cert.c7) {
        cert.conclusion = Conclusion::refuted;
        cert.reason = "found an induced C7";
    }
    else if (cert.odd_hole) {
        cert.conclusion = Conclusion::refuted;
        cert.reason = "found an odd hole " + cert.odd_hole->pattern;
    }
    else if (cert.odd_antihole) {
        cert.conclusion = Conclusion::refuted;
        cert.reason = "found an odd antihole " + cert.odd_antihole->pattern;
    }
    else {
        cert.conclusion = Conclusion::perfect;
        if (g.order() <= oracle.max_order)
            cert.coloring = chromatic_number(g, oracle).witness;
    }
    return cert;
}

auto exhaustive_perfection(const Graph & g, int max_order) -> bool
{
    if (g.order() > max_order)
        throw SizeGuardExceeded("exhaustive perfection check refuses " + std::to_string(g.order())
            + " vertices; the guard is " + std::to_string(max_order));

    auto n = g.order();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<Vertex> chosen;
        for (int v = 0; v < n; ++v)
            if (mask & (std::uint32_t{1} << v))
                chosen.push_back(v);
        auto h = induced(g, std::span<const Vertex>(chosen)).graph;
        if (chromatic_number(h).chi != clique_number(h))
            return false;
    }
    return true;
}

}
