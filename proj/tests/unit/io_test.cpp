#include "io.hpp"

#include <chibound/gen.hpp>

#include <gtest/gtest.h>

using namespace chibound;
using namespace chibound::cli;

namespace {

auto parse_error_line(std::string_view text, Format format) -> int
{
    try {
        (void) parse_graph(text, format);
    }
    catch (const ParseError & e) {
        return e.line();
    }
    return 0;
}

}

TEST(Dimacs, Triangle)
{
    auto g = parse_dimacs("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    EXPECT_EQ(g, complete_graph(3));
}

TEST(Dimacs, ColVariantAndDuplicates)
{
    auto g = parse_dimacs("p col 4 4\ne 1 2\ne 2 1\ne 3 4\n\n");
    EXPECT_EQ(g, Graph::from_edge_list(4, {{0, 1}, {2, 3}}));
}

TEST(Dimacs, IsolatedVertices)
{
    EXPECT_EQ(parse_dimacs("p edge 5 0\n"), empty_graph(5));
}

TEST(Dimacs, Errors)
{
    EXPECT_EQ(parse_error_line("p edge 3 1\ne 1 4\n", Format::dimacs), 2);
    EXPECT_EQ(parse_error_line("c x\np edge 3 1\ne 0 2\n", Format::dimacs), 3);
    EXPECT_EQ(parse_error_line("p edge 3 1\ne 2 2\n", Format::dimacs), 2);
    EXPECT_EQ(parse_error_line("e 1 2\n", Format::dimacs), 1);
    EXPECT_EQ(parse_error_line("p edge 3 1\np edge 3 1\n", Format::dimacs), 2);
    EXPECT_EQ(parse_error_line("p edge x 1\n", Format::dimacs), 1);
    EXPECT_EQ(parse_error_line("p edge 3 1\nq 1 2\n", Format::dimacs), 2);
    EXPECT_EQ(parse_error_line("p edge 3 1\ne 1\n", Format::dimacs), 2);
    EXPECT_EQ(parse_error_line("c only comments\n", Format::dimacs), 1);
    EXPECT_EQ(parse_error_line("p edge 100000 0\n", Format::dimacs), 1);
}

TEST(Dimacs, RoundTrip)
{
    for (const auto & name : {"grotzsch", "petersen", "two-K5s", "P2uP4"}) {
        auto g = named_graph(name);
        EXPECT_EQ(parse_dimacs(render_dimacs(g)), g) << name;
    }
    EXPECT_EQ(parse_dimacs(render_dimacs(empty_graph(0))), empty_graph(0));
}

TEST(Json, Parse)
{
    auto g = parse_json_graph(R"({"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]})");
    EXPECT_EQ(g, path_graph(4));
}

TEST(Json, Errors)
{
    EXPECT_GT(parse_error_line(R"({"n": 3, "edges": [[0, 3]]})", Format::json), 0);
    EXPECT_GT(parse_error_line(R"({"n": 3, "edges": [[1, 1]]})", Format::json), 0);
    EXPECT_GT(parse_error_line(R"({"edges": []})", Format::json), 0);
    EXPECT_GT(parse_error_line(R"({"n": 3, "edges": [[0]]})", Format::json), 0);
    EXPECT_GT(parse_error_line(R"({"n": 3, "edges": {}})", Format::json), 0);
    EXPECT_EQ(parse_error_line("{\n\"n\": 3,\n\"edges\": [[0, 1],,]\n}", Format::json), 3);
}

TEST(Json, RoundTrip)
{
    for (const auto & name : {"grotzsch", "gem", "K6"}) {
        auto g = named_graph(name);
        EXPECT_EQ(parse_json_graph(render_json_graph(g)), g) << name;
    }
}

TEST(Formats, Names)
{
    EXPECT_EQ(parse_format("json"), Format::json);
    EXPECT_EQ(parse_format("dimacs"), Format::dimacs);
    EXPECT_FALSE(parse_format("graphml"));
    EXPECT_EQ(guess_format("a/b.json"), Format::json);
    EXPECT_EQ(guess_format("a/b.col"), Format::dimacs);
    EXPECT_EQ(guess_format("graph"), Format::dimacs);
}
