#include "cli.hpp"

#include "io.hpp"

#include <chibound/clique.hpp>
#include <chibound/colorers.hpp>
#include <chibound/gen.hpp>
#include <chibound/oracle.hpp>
#include <chibound/perfection.hpp>
#include <chibound/wagon.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace chibound::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Input or usage problem; becomes exit code 2.
class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Options
{
    std::string input;
    std::string name;
    std::string format;
    std::uint64_t seed = 0;
    bool strict = false;
    bool verify = false;
    std::string cls;
    std::string forbid;
    int n = -1;
    double p = -1.0;
    std::string out;
    int max_tries = 1000;
    int max_order = OracleOptions{}.max_order;
};

auto to_json(const PatternWitness & w) -> Json
{
    return Json{{"pattern", w.pattern}, {"vertices", w.embedding}};
}

auto to_json(const std::optional<PatternWitness> & w) -> Json
{
    return w ? to_json(*w) : Json(nullptr);
}

auto to_json(const Certificate & c) -> Json
{
    if (auto w = std::get_if<PatternWitness>(&c))
        return to_json(*w);
    return Json{{"clique", std::get<CliqueCertificate>(c).members}};
}

auto to_json(const StructureViolation & v) -> Json
{
    return Json{{"claim", v.claim}, {"statement", v.statement}, {"evidence", to_json(v.evidence)},
        {"forbidden", to_json(v.forbidden)}};
}

auto to_json(const MembershipReport & report) -> Json
{
    Json checks = Json::array();
    for (const auto & c : report.checks)
        checks.push_back(Json{{"pattern", c.pattern}, {"present", c.witness.has_value()}, {"witness", to_json(c.witness)}});
    return checks;
}

auto parse_class(const std::string & name) -> GraphClass
{
    if (auto cls = parse_graph_class(name))
        return *cls;
    throw UsageError("unknown class '" + name + "'; expected gem, butterfly or diamond");
}

auto require_class(const Options & o) -> GraphClass
{
    if (o.cls.empty())
        throw UsageError("--class is required");
    return parse_class(o.cls);
}

auto forbidden_from(const Options & o) -> std::vector<Pattern>
{
    if (o.forbid.empty()) {
        if (o.cls.empty())
            throw UsageError("--forbid or --class is required");
        return forbidden_patterns(parse_class(o.cls));
    }

    std::vector<Pattern> result;
    std::stringstream list(o.forbid);
    std::string item;
    while (std::getline(list, item, ',')) {
        if (item == "p2p4" || item == "P2uP4")
            result.push_back(patterns::p2_union_p4());
        else if (item == "c5" || item == "c7")
            result.push_back(patterns::cycle(item[1] - '0'));
        else if (auto p = pattern_by_name(item))
            result.push_back(*p);
        else
            throw UsageError("unknown pattern '" + item + "'");
    }
    if (result.empty())
        throw UsageError("--forbid lists no patterns");
    return result;
}

auto load_graph(const Options & o) -> Graph
{
    if (o.input.empty() == o.name.empty())
        throw UsageError("give exactly one of --input and --name");

    if (! o.name.empty()) {
        try {
            return named_graph(o.name);
        }
        catch (const std::invalid_argument & e) {
            throw UsageError(e.what());
        }
    }

    std::ifstream file(o.input, std::ios::binary);
    if (! file)
        throw UsageError("cannot read '" + o.input + "'");
    std::stringstream text;
    text << file.rdbuf();

    auto format = guess_format(o.input);
    if (! o.format.empty())
        format = *parse_format(o.format);
    try {
        return parse_graph(text.str(), format);
    }
    catch (const ParseError & e) {
        throw UsageError(o.input + ": " + e.what());
    }
}

struct Outcome
{
    Json result;
    int code = exit_ok;
};

auto do_check(const Graph & g, const Options & o) -> Outcome
{
    auto report = is_in_class(g, forbidden_from(o));
    return {Json{{"member", report.member()}, {"checks", to_json(report)}}, report.member() ? exit_ok : exit_failed};
}

auto do_partition(const Graph & g, const Options & o) -> Outcome
{
    auto cls = require_class(o);
    auto clique = max_clique(g);
    auto partition = wagon_partition(g, clique);
    if (! partition)
        return {Json{{"omega", clique.size()}, {"violation", to_json(partition.failure())}}, exit_failed};
    const auto & p = partition.value();

    Json pairs = Json::array();
    for (int i = 0; i < p.omega(); ++i)
        for (int j = i + 1; j < p.omega(); ++j)
            if (! p.pair(i, j).empty())
                pairs.push_back(Json{{"pair", {i + 1, j + 1}}, {"vertices", p.pair(i, j).members()}});
    Json singles = Json::array();
    for (int a = 0; a < p.omega(); ++a)
        if (! p.single(a).empty())
            singles.push_back(Json{{"index", a + 1}, {"vertices", p.single(a).members()}});

    auto report = verify_structure(g, p, cls);
    Json facts = Json::array();
    for (const auto & f : report.facts) {
        Json fact{{"claim", f.claim}, {"statement", f.statement}, {"holds", f.holds()}};
        if (f.violation) {
            fact["evidence"] = to_json(f.violation->evidence);
            fact["forbidden"] = to_json(f.violation->forbidden);
        }
        facts.push_back(std::move(fact));
    }

    Json result{{"class", to_string(cls)}, {"omega", p.omega()}, {"clique", p.clique()}, {"pair_sets", pairs},
        {"single_sets", singles}, {"facts", facts}};
    return {std::move(result), report.all_hold() ? exit_ok : exit_failed};
}

auto oracle_options(const Options & o) -> OracleOptions
{
    return OracleOptions{o.max_order};
}

auto do_color(const Graph & g, const Options & o) -> Outcome
{
    auto cls = require_class(o);
    auto colored = color_in_class(g, cls, ColorOptions{o.strict});
    if (! colored)
        return {Json{{"class", to_string(cls)}, {"violation", to_json(colored.failure())}}, exit_failed};

    const auto & c = colored.value();
    Json result{{"class", to_string(cls)}, {"omega", c.omega}, {"bound", c.coloring.bound},
        {"colors_used", c.coloring.colors_used}, {"assignment", c.coloring.colors}};
    if (c.arm)
        result["arm"] = to_string(*c.arm);
    result["claims"] = c.claims;

    auto code = exit_ok;
    if (o.verify) {
        auto proper = ! verify_coloring(g, c.coloring);
        auto oracle = chromatic_number(g, oracle_options(o));
        auto ok = proper && oracle.chi <= c.coloring.colors_used && c.coloring.colors_used <= c.coloring.bound;
        result["verify"] = Json{{"proper", proper}, {"chi", oracle.chi}, {"ok", ok}};
        if (! ok)
            code = exit_failed;
    }
    return {std::move(result), code};
}

auto do_oracle(const Graph & g, const Options & o) -> Outcome
{
    auto r = chromatic_number(g, oracle_options(o));
    return {Json{{"chi", r.chi}, {"assignment", r.witness.colors}}, exit_ok};
}

auto do_certify(const Graph & g, const Options & o) -> Outcome
{
    auto cert = certify_perfect(g, oracle_options(o));
    Json result{{"conclusion", to_string(cert.conclusion)}, {"reason", cert.reason}, {"omega", cert.omega},
        {"class_check", to_json(cert.class_check)}, {"c7", to_json(cert.c7)}, {"odd_hole", to_json(cert.odd_hole)},
        {"odd_antihole", to_json(cert.odd_antihole)}};
    result["coloring"] = cert.coloring ? Json(cert.coloring->colors) : Json(nullptr);
    return {std::move(result), cert.conclusion == Conclusion::refuted ? exit_failed : exit_ok};
}

auto do_gen(const Options & o, bool seeded, Json & input) -> Outcome
{
    if (! seeded)
        throw UsageError("gen needs an explicit --seed");
    if (o.n < 0)
        throw UsageError("gen needs --n");

    auto p = o.p;
    if (p < 0) {
        if (o.cls.empty())
            throw UsageError("gen needs --p when no --class is given");
        p = default_density(parse_class(o.cls));
    }
    if (p > 1)
        throw UsageError("--p must lie in [0, 1]");
    if (o.max_tries < 1)
        throw UsageError("--max-tries must be at least 1");

    auto sample = random_in_class(GenSpec{o.n, p, forbidden_from(o), o.seed, o.max_tries});
    if (! sample.graph)
        return {Json{{"tries", sample.tries}, {"graph", nullptr}}, exit_failed};

    const auto & g = *sample.graph;
    input = Json{{"n", g.order()}, {"m", g.edge_count()}};
    Json result{{"tries", sample.tries}, {"p", p}};

    auto format = o.out.empty() ? Format::json : guess_format(o.out);
    if (! o.format.empty())
        format = *parse_format(o.format);
    if (o.out.empty())
        result["graph"] = Json::parse(render_json_graph(g));
    else {
        std::ofstream file(o.out, std::ios::binary);
        if (! (file << render_graph(g, format)))
            throw UsageError("cannot write '" + o.out + "'");
        result["out"] = o.out;
    }
    return {std::move(result), exit_ok};
}

}

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Colour (P2 u P4, X)-free graphs within their chi-binding bounds", "chibound"};
    app.require_subcommand(1);

    Options o;
    std::map<std::string, CLI::Option *> seeds;
    auto add_common = [&](CLI::App * sub, bool reads_graph) {
        if (reads_graph) {
            sub->add_option("--input", o.input, "Graph file");
            sub->add_option("--name", o.name, "Named graph, e.g. grotzsch, two-K5s, K6, clique-plus-pendant(5)");
        }
        sub->add_option("--format", o.format, "dimacs or json (default: by file extension)")
            ->check(CLI::IsMember({"dimacs", "json"}));
        seeds[sub->get_name()] = sub->add_option("--seed", o.seed, "Seed for randomized commands");
    };

    auto check = app.add_subcommand("check", "Test for induced copies of forbidden patterns");
    add_common(check, true);
    check->add_option("--forbid", o.forbid, "Comma list: p2p4, diamond, gem, butterfly, c5, c7, K<t>, C<k>");
    check->add_option("--class", o.cls, "Use the class's forbidden set");

    auto partition = app.add_subcommand("partition", "Partition around a maximum clique and check structure");
    add_common(partition, true);
    partition->add_option("--class", o.cls, "gem, butterfly or diamond")->required();

    auto color = app.add_subcommand("color", "Colour within the class's binding bound");
    add_common(color, true);
    color->add_option("--class", o.cls, "gem, butterfly or diamond")->required();
    color->add_flag("--strict", o.strict, "Check class membership first");
    color->add_flag("--verify", o.verify, "Check the colouring against the exact oracle");
    color->add_option("--max-order", o.max_order, "Oracle size guard");

    auto oracle = app.add_subcommand("oracle", "Exact chromatic number");
    add_common(oracle, true);
    oracle->add_option("--max-order", o.max_order, "Size guard");

    auto certify = app.add_subcommand("certify-perfect", "Perfection certificate for (P2 u P4, diamond, C5)-free graphs");
    add_common(certify, true);
    certify->add_option("--max-order", o.max_order, "Oracle size guard for the optimal colouring");

    auto gen = app.add_subcommand("gen", "Sample a random class member");
    add_common(gen, false);
    gen->add_option("--class", o.cls, "gem, butterfly or diamond");
    gen->add_option("--forbid", o.forbid, "Forbidden patterns, as for check");
    gen->add_option("--n", o.n, "Vertex count")->check(CLI::NonNegativeNumber);
    gen->add_option("--p", o.p, "Edge density")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--max-tries", o.max_tries, "Rejection-sampling budget");
    gen->add_option("--out", o.out, "Output file (default: embed in the report)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    auto * sub = app.get_subcommands().front();
    auto command = sub->get_name();
    Json report{{"command", command}, {"input", nullptr}, {"result", nullptr}, {"exit_status", exit_ok}};

    int code = exit_ok;
    try {
        Outcome outcome;
        if (command == "gen") {
            Json input = nullptr;
            outcome = do_gen(o, seeds[command]->count() > 0, input);
            report["input"] = input;
        }
        else {
            auto g = load_graph(o);
            report["input"] = Json{{"n", g.order()}, {"m", g.edge_count()}};
            if (command == "check")
                outcome = do_check(g, o);
            else if (command == "partition")
                outcome = do_partition(g, o);
            else if (command == "color")
                outcome = do_color(g, o);
            else if (command == "oracle")
                outcome = do_oracle(g, o);
            else
                outcome = do_certify(g, o);
        }
        report["result"] = std::move(outcome.result);
        code = outcome.code;
    }
    catch (const UsageError & e) {
        err << "chibound: " << e.what() << '\n';
        report["error"] = e.what();
        code = exit_usage;
    }
    catch (const SizeGuardExceeded & e) {
        err << "chibound: " << e.what() << '\n';
        report["error"] = e.what();
        code = exit_usage;
    }

    report["exit_status"] = code;
    out << report.dump(2) << '\n';
    return code;
}

}
