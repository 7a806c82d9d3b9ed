#include <doctest.h>

#include "oracles.hpp"

#include <kgeo/canon.hpp>
#include <kgeo/catalog.hpp>
#include <kgeo/core.hpp>

#include <random>
#include <sstream>

#ifndef KGEO_FIXTURE_DIR
#error "KGEO_FIXTURE_DIR must be defined"
#endif

using namespace kgeo;

namespace {

auto fixture(const char * name) -> std::string { return std::string(KGEO_FIXTURE_DIR) + "/" + name; }

auto parse_error_line(std::string_view text) -> std::size_t
{
    try {
        read_digraph(text);
    }
    catch (const ParseError & e) {
        return e.line();
    }
    return ~std::size_t{0};
}

} // namespace

TEST_CASE("catalog A")
{
    auto a = catalog_A();
    CHECK(a.id == "A");
    CHECK(a.digraph == Digraph({{1, 2}, {3, 4}, {5, 6}, {0, 8}, {5, 7}, {1, 8}, {0, 4}, {2, 3}, {6, 7}}));
    CHECK(a.names == std::vector<std::string>{"u", "u1", "u2", "v1", "u4", "u5", "u6", "v", "v4"});
    for (Vertex v = 0; v < 9; ++v)
        CHECK(a.digraph.in_degree(v) == 2);
    CHECK(verify(a.digraph, {.d = 2, .k = 2, .epsilon = 2, .diregular = true}).passed());
    CHECK(a.index_of("v") == 7);
    CHECK_THROWS_AS(a.index_of("w"), RangeError);
}

TEST_CASE("catalog B")
{
    auto b = catalog_B();
    CHECK(b.digraph == Digraph({{1, 2}, {3, 4}, {5, 6}, {2, 7}, {5, 6}, {0, 8}, {1, 7}, {0, 8}, {3, 4}}));
    CHECK(b.names == std::vector<std::string>{"u", "u1", "u2", "v", "u4", "u5", "u6", "v1", "v4"});
    auto out = [&] (Vertex v) { return VertexSet(b.digraph.out(v).begin(), b.digraph.out(v).end()); };
    CHECK(out(2) == out(4));
    CHECK(out(5) == out(7));
    CHECK(verify(b.digraph, {.d = 2, .k = 2, .epsilon = 2, .diregular = true}).passed());
    CHECK_FALSE(are_isomorphic(catalog_A().digraph, b.digraph));
}

TEST_CASE("catalog lookup")
{
    CHECK(catalog_entry("a").digraph == catalog_A().digraph);
    CHECK(catalog_entry("B").digraph == catalog_B().digraph);
    CHECK_THROWS_AS(catalog_entry("C"), RangeError);
}

TEST_CASE("fixtures round-trip")
{
    CHECK(read_digraph_file(fixture("A.dg")) == catalog_A().digraph);
    CHECK(read_digraph_file(fixture("B.dg")) == catalog_B().digraph);
    CHECK_THROWS_AS(read_digraph_file(fixture("missing.dg")), Error);
}

TEST_CASE("write format")
{
    auto text = write_digraph(catalog_A().digraph);
    CHECK(text.starts_with("n 9\n0: 1 2\n"));
    CHECK(text.ends_with("8: 6 7\n"));
    CHECK(write_digraph(Digraph({{}, {0}})) == "n 2\n0:\n1: 0\n");
    CHECK(text.find(" \n") == std::string::npos);
}

TEST_CASE("reader accepts")
{
    CHECK(read_digraph("n 1\n") == Digraph(std::vector<VertexSet>{{}}));
    CHECK(read_digraph("n 3\n") == Digraph(std::vector<VertexSet>(3)));
    CHECK(read_digraph("n 1\n0:\n") == Digraph(std::vector<VertexSet>{{}}));
    CHECK(read_digraph("# comment\n\nn 3\n2: 0\n# x\n0: 2 1\n1:\n") == Digraph({{1, 2}, {}, {0}}));
    CHECK(read_digraph("n 2\r\n0: 1\r\n1: 0\r\n") == directed_cycle(2));
}

TEST_CASE("reader rejects")
{
    CHECK_THROWS_AS(read_digraph("n 9\n0: 0 9\n"), ParseError);
    CHECK(parse_error_line("n 9\n0: 0 9\n") == 2);
    try {
        read_digraph("n 9\n0: 0 9\n");
    }
    catch (const ParseError & e) {
        CHECK(std::string(e.what()).find("vertex 0") != std::string::npos);
    }
    CHECK(parse_error_line("n 2\n0: 1 1\n1: 0\n") == 2);
    CHECK(parse_error_line("n 2\n0: 1\n0: 1\n") == 3);
    CHECK(parse_error_line("n 3\n0: 1\n1: 0\n") == 1);
    CHECK(parse_error_line("0: 1\n") == 1);
    CHECK(parse_error_line("n x\n") == 1);
    CHECK(parse_error_line("n 2\n0 1\n") == 2);
    CHECK(parse_error_line("n 2\n0: a\n") == 2);
    CHECK(parse_error_line("n 2\n2: 0\n") == 2);
    CHECK(parse_error_line("n 1\nn 1\n") == 2);
    CHECK(parse_error_line("") == 0);
    CHECK(parse_error_line("# only a comment\n") == 0);
}

TEST_CASE("read of write is the identity")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = oracle::random_digraph(rng, 1 + rng() % 20, 0.05 * (trial % 10), trial % 3 == 0);
        REQUIRE(read_digraph(write_digraph(g)) == g);
    }
}

TEST_CASE("multi-digraph reader")
{
    std::istringstream in(write_digraph(catalog_A().digraph) + "\n# next\n" + write_digraph(catalog_B().digraph));
    auto all = read_digraphs(in);
    REQUIRE(all.size() == 2);
    CHECK(all[0] == catalog_A().digraph);
    CHECK(all[1] == catalog_B().digraph);
    std::istringstream empty("");
    CHECK(read_digraphs(empty).empty());
}
