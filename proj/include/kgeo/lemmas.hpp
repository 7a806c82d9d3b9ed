#pragma once

#include <kgeo/digraph.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace kgeo {

struct PairClass {
    Vertex u;
    Vertex v;
    std::size_t common_out;
    // Set only by classify_pair, i.e. for single-common-out-neighbour pairs
    // of a diregular (2,2,+2)-digraph.
    std::optional<bool> bad;
};

// Directed 3-cycles, each rotated to start at its smallest vertex.
struct CycleCensus {
    std::vector<std::array<Vertex, 3>> triangles;
    std::vector<std::size_t> per_vertex;

    // Vertices lying on exactly `count` triangles.
    auto vertices_on(std::size_t count) const -> std::vector<Vertex>;
};

// Outcome of a structural check that is only claimed for diregular
// (2,k,+2)-digraphs.
struct LemmaCheck {
    bool applicable = false;
    std::string reason; // why it was not applicable
    bool holds = false;
    std::vector<std::string> violations;
};

// Unordered pairs {u, v}, u < v, with |N+(u) ∩ N+(v)| = c, in lexicographic order.
auto common_out_pairs(const Digraph & g, std::size_t c) -> std::vector<PairClass>;

// Pairs u < v with N+(u) = N+(v), both of out-degree at least one.
auto identical_out_pairs(const Digraph & g) -> std::vector<std::pair<Vertex, Vertex>>;

// The k for which g verifies as a diregular (2,k,+2)-digraph with k >= 2,
// or nullopt.
auto excess_two_depth(const Digraph & g) -> std::optional<unsigned>;

// For every pair with N+(u) = N+(v) = {u1, u2}: u1 in O(u2), u2 in O(u1),
// v in O(u), u in O(v) and O(u) - {v} = O(v) - {u}.
auto check_lemma_identical_neighbourhoods(const Digraph & g, unsigned k) -> LemmaCheck;

// Some pair has exactly one common out-neighbour.
auto check_lemma_pair_exists(const Digraph & g) -> LemmaCheck;

// Bad/good status of a pair with a single common out-neighbour in a
// diregular (2,2,+2)-digraph. Throws PreconditionError naming the failed
// precondition otherwise.
auto classify_pair(const Digraph & g, Vertex u, Vertex v, unsigned k) -> PairClass;

// classify_pair over every single-common-out-neighbour pair.
auto classify_all_pairs(const Digraph & g) -> std::vector<PairClass>;

auto triangle_census(const Digraph & g) -> CycleCensus;

// counts[w] = number of u with w in O(u).
auto outlier_multiplicity(const Digraph & g, unsigned k) -> std::vector<std::size_t>;

} // namespace kgeo
