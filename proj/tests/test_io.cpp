#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wklab/enumerate.hpp"
#include "wklab/graph_io.hpp"

using namespace wklab;

TEST_CASE("graph6 decodes C~ to K4") {
    Graph g = parse_graph6_line("C~");
    CHECK(g == Graph::complete(4));
    CHECK(g.edge_count() == 6);
    CHECK(emit_graph6(Graph::complete(4)) == "C~");
}

TEST_CASE("graph6 small orders") {
    CHECK(parse_graph6_line("?").vertex_count() == 0);
    CHECK(parse_graph6_line("@").vertex_count() == 1);
    CHECK(parse_graph6_line(">>graph6<<A_").edge_count() == 1); // optional header
    CHECK(emit_graph6(Graph::empty(0)) == "?");
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6_line("C"), parse_error);    // truncated
    CHECK_THROWS_AS(parse_graph6_line("C~~"), parse_error);  // trailing bytes
    CHECK_THROWS_AS(parse_graph6_line("C\x1f"), parse_error); // byte below '?'
}

TEST_CASE("edge list parses the C4 example") {
    auto r = parse_graph("4\n0 1\n1 2\n2 3\n3 0\n", GraphFormat::edge_list);
    CHECK(r.graph == Graph::cycle(4));
    CHECK(r.vertex_names == std::vector<std::string>{"0", "1", "2", "3"});
}

TEST_CASE("edge list errors carry line numbers") {
    try {
        parse_graph("3\n0 1\n1 3\n", GraphFormat::edge_list);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_graph("3\n1 1\n", GraphFormat::edge_list), parse_error); // loop
    CHECK_THROWS_AS(parse_graph("", GraphFormat::edge_list), parse_error);
    CHECK_THROWS_AS(parse_graph("2\n0\n", GraphFormat::edge_list), parse_error);
}

TEST_CASE("dimacs parses 1-based ids and keeps names") {
    auto r = parse_graph("c a comment\np edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::dimacs);
    CHECK(r.graph == Graph::path(3));
    CHECK(r.vertex_names == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("dimacs rejects malformed input") {
    CHECK_THROWS_AS(parse_graph("p edge x 1\ne 1 2\n", GraphFormat::dimacs), parse_error);
    CHECK_THROWS_AS(parse_graph("e 1 2\np edge 2 1\n", GraphFormat::dimacs), parse_error);
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 1\n", GraphFormat::dimacs), parse_error); // loop
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 0 1\n", GraphFormat::dimacs), parse_error);
    CHECK_THROWS_AS(parse_graph("p edge 2 2\ne 1 2\n", GraphFormat::dimacs), parse_error);
    try {
        parse_graph("p edge 2 1\ne 1 3\n", GraphFormat::dimacs);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("round trips on seeded random graphs, all formats") {
    std::mt19937_64 rng(777);
    for (int rep = 0; rep < 100; ++rep) {
        int n = static_cast<int>(rng() % 11);
        Graph g = random_graph(n, 0.4, rng);
        for (auto fmt : {GraphFormat::graph6, GraphFormat::dimacs, GraphFormat::edge_list}) {
            auto text = emit_graph(g, fmt);
            auto back = parse_graph(text, fmt);
            CHECK(back.graph == g);
            CHECK(emit_graph(back.graph, fmt) == text);
        }
    }
}

TEST_CASE("graph6 handles multi-word and long-order graphs") {
    std::mt19937_64 rng(4242);
    for (int n : {62, 63, 70, 100}) {
        Graph g = random_graph(n, 0.1, rng);
        auto text = emit_graph6(g);
        CHECK(parse_graph6_line(text) == g);
        if (n >= 63) CHECK(text[0] == '~'); // long-order form
    }
}

TEST_CASE("random garbage never crashes the parsers") {
    std::mt19937_64 rng(3133);
    int parsed = 0, rejected = 0;
    for (int rep = 0; rep < 3000; ++rep) {
        std::string junk;
        int len = static_cast<int>(rng() % 16);
        for (int i = 0; i < len; ++i) junk.push_back(static_cast<char>(32 + rng() % 96));
        for (auto fmt : {GraphFormat::graph6, GraphFormat::dimacs, GraphFormat::edge_list}) {
            try {
                parse_graph(junk, fmt);
                ++parsed;
            } catch (const parse_error&) {
                ++rejected;
            }
        }
    }
    CHECK(parsed + rejected == 9000);
    CHECK(rejected > 0);
}

TEST_CASE("format helpers") {
    CHECK(format_from_name("g6") == GraphFormat::graph6);
    CHECK(format_from_name("dimacs") == GraphFormat::dimacs);
    CHECK(format_from_name("edgelist") == GraphFormat::edge_list);
    CHECK(!format_from_name("xml"));
    CHECK(sniff_format("p edge 2 1\ne 1 2\n") == GraphFormat::dimacs);
    CHECK(sniff_format("4\n0 1\n") == GraphFormat::edge_list);
    CHECK(sniff_format("C~\n") == GraphFormat::graph6);
}
