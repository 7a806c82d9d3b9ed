#pragma once

#include <kgeo/digraph.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace kgeo {

// Relabeling-invariant encoding: n as 4 big-endian bytes, then the n x n
// adjacency bit matrix of the canonically relabeled digraph, row-major,
// packed most-significant bit first and zero-padded to a byte boundary.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    auto hex() const -> std::string;
    auto order() const -> std::size_t;

    // The canonically labeled digraph this form encodes.
    auto decode() const -> Digraph;

    friend auto operator<=>(const CanonicalForm &, const CanonicalForm &) = default;
    friend auto operator==(const CanonicalForm &, const CanonicalForm &) -> bool = default;

    static auto from_hex(const std::string & text) -> CanonicalForm;
};

struct OrbitPartition {
    // orbit_id[v] is the smallest vertex in v's orbit.
    std::vector<Vertex> orbit_id;
    std::size_t orbit_count = 0;

    auto vertex_transitive() const -> bool { return orbit_count == 1; }
};

struct CanonicalLabeling {
    CanonicalForm form;
    // position[v] is the canonical label of v.
    std::vector<Vertex> position;
    // Generators of the automorphism group found during the search, each as
    // an image array v -> image[v].
    std::vector<std::vector<Vertex>> automorphisms;
    std::size_t leaves = 0;
};

// Full canonical labeling search. Requires n >= 1.
auto canonical_labeling(const Digraph & g) -> CanonicalLabeling;

auto canonical_form(const Digraph & g) -> CanonicalForm;

auto are_isomorphic(const Digraph & g, const Digraph & h) -> bool;

auto automorphism_orbits(const Digraph & g) -> OrbitPartition;

// Adjacency encoding of g with the vertex at label i being order[i]; exposed
// for tests.
auto encode_adjacency(const Digraph & g, const std::vector<Vertex> & position) -> CanonicalForm;

} // namespace kgeo
