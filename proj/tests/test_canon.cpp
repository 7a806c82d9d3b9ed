#include <doctest.h>

#include "oracles.hpp"

#include <kgeo/canon.hpp>
#include <kgeo/catalog.hpp>
#include <kgeo/core.hpp>
#include <kgeo/search.hpp>

#include <random>

using namespace kgeo;

TEST_CASE("canonical form encoding layout")
{
    // 0 -> 1 on two vertices: n = 2, bits 01 00 (row 0 then row 1)
    auto f = encode_adjacency(Digraph({{1}, {}}), {0, 1});
    CHECK(f.bytes == std::vector<std::uint8_t>{0, 0, 0, 2, 0x40});
    CHECK(f.hex() == "0000000240");
    CHECK(f.order() == 2);
    CHECK(CanonicalForm::from_hex("0000000240") == f);
    CHECK_THROWS_AS(CanonicalForm::from_hex("00000002"), ParseError);
    CHECK_THROWS_AS(CanonicalForm::from_hex("000000024g"), ParseError);
    CHECK(f.decode() == Digraph({{1}, {}}));
}

TEST_CASE("canonical form is relabeling invariant")
{
    std::mt19937 rng(2024);
    std::vector<Digraph> samples{catalog_A().digraph, catalog_B().digraph, directed_cycle(7), complete_digraph(5),
        Digraph({{}, {}, {}, {}, {}, {}})};
    for (int i = 0; i < 60; ++i)
        samples.push_back(oracle::random_digraph(rng, 1 + rng() % 14, 0.05 + 0.1 * (i % 6)));
    for (int i = 0; i < 20; ++i)
        samples.push_back(oracle::random_out_regular(rng, 4 + rng() % 13, 2));

    for (auto & g : samples) {
        auto form = canonical_form(g);
        CHECK(are_isomorphic(form.decode(), g));
        CHECK(canonical_form(form.decode()) == form);
        for (int t = 0; t < 10; ++t) {
            auto perm = oracle::random_permutation(rng, g.order());
            REQUIRE(canonical_form(g.relabel(perm)) == form);
        }
    }
}

TEST_CASE("directed 3-cycle has one canonical form under all six labelings")
{
    auto c = directed_cycle(3);
    auto form = canonical_form(c);
    std::vector<Vertex> p{0, 1, 2};
    int labelings = 0;
    do {
        CHECK(canonical_form(c.relabel(p)) == form);
        ++labelings;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(labelings == 6);
}

TEST_CASE("catalog digraphs are not isomorphic")
{
    auto a = catalog_A().digraph, b = catalog_B().digraph;
    CHECK(canonical_form(a) != canonical_form(b));
    CHECK_FALSE(are_isomorphic(a, b));
    CHECK_FALSE(oracle::isomorphic(a, b));
    std::mt19937 rng(5);
    auto shuffled = a.relabel(oracle::random_permutation(rng, 9));
    CHECK(are_isomorphic(a, shuffled));
    CHECK_FALSE(are_isomorphic(directed_cycle(3), directed_cycle(4)));
    CHECK_THROWS_AS(canonical_form(Digraph()), PreconditionError);
}

TEST_CASE("automorphism orbits")
{
    CHECK(automorphism_orbits(directed_cycle(3)).orbit_count == 1);
    CHECK(automorphism_orbits(directed_cycle(3)).vertex_transitive());
    auto a = automorphism_orbits(catalog_A().digraph);
    auto b = automorphism_orbits(catalog_B().digraph);
    CHECK(a.orbit_count > 1);
    CHECK(b.orbit_count > 1);
    CHECK(a.orbit_id == oracle::orbits(catalog_A().digraph));
    CHECK(b.orbit_id == oracle::orbits(catalog_B().digraph));
    CHECK(automorphism_orbits(complete_digraph(6)).orbit_count == 1);
    CHECK(automorphism_orbits(Digraph({{1}, {}, {}})).orbit_count == 3);
    CHECK(automorphism_orbits(Digraph({{1}, {0}, {}})).orbit_count == 2);

    // Cayley digraphs are vertex-transitive
    for (auto & w : search_cayley_a4(2, 5))
        CHECK(automorphism_orbits(w.digraph).vertex_transitive());
}

TEST_CASE("orbits are equivalence classes with matching local invariants")
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = trial % 2 ? oracle::random_out_regular(rng, 3 + rng() % 10, 2)
                           : oracle::random_digraph(rng, 2 + rng() % 10, 0.3);
        auto orbits = automorphism_orbits(g);
        auto dist = oracle::distances(g);
        for (Vertex v = 0; v < g.order(); ++v) {
            auto root = orbits.orbit_id[v];
            REQUIRE(orbits.orbit_id[root] == root);
            REQUIRE(g.in_degree(v) == g.in_degree(root));
            REQUIRE(g.out_degree(v) == g.out_degree(root));
            auto sv = dist[v], sr = dist[root];
            std::sort(sv.begin(), sv.end());
            std::sort(sr.begin(), sr.end());
            REQUIRE(sv == sr);
        }
    }
}

TEST_CASE("orbits match brute-force automorphism enumeration for n <= 7")
{
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 7;
        auto g = trial % 3 == 0 ? oracle::random_out_regular(rng, std::max<std::size_t>(n, 3), 1 + rng() % 2)
                                : oracle::random_digraph(rng, n, 0.1 + 0.2 * (trial % 4));
        REQUIRE(automorphism_orbits(g).orbit_id == oracle::orbits(g));
    }
}

TEST_CASE("automorphisms harvested are genuine")
{
    for (auto & g : {catalog_A().digraph, catalog_B().digraph, complete_digraph(4), directed_cycle(6)}) {
        auto labeling = canonical_labeling(g);
        for (auto & a : labeling.automorphisms)
            CHECK(g.relabel(a) == g);
    }
}
