#pragma once

#include <kgeo/error.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kgeo {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;

// Immutable directed graph on vertices 0..n-1 stored as sorted out-adjacency
// lists. Self-loops are representable; parallel arcs are not.
class Digraph {
public:
    Digraph() = default;

    // Out-lists may be given in any order; they are sorted on construction.
    // Throws RangeError for an out-of-range target and Error for a repeated arc.
    explicit Digraph(std::vector<VertexSet> out_lists);

    static auto from_arcs(std::size_t n, std::span<const std::pair<Vertex, Vertex>> arcs) -> Digraph;

    auto order() const -> std::size_t { return _out.size(); }
    auto arc_count() const -> std::size_t { return _arcs; }

    auto out(Vertex u) const -> std::span<const Vertex>;
    auto in(Vertex u) const -> std::span<const Vertex>;
    auto out_degree(Vertex u) const -> std::size_t { return out(u).size(); }
    auto in_degree(Vertex u) const -> std::size_t { return in(u).size(); }

    auto has_arc(Vertex u, Vertex v) const -> bool;

    // The digraph with vertex v renamed to perm[v].
    auto relabel(std::span<const Vertex> perm) const -> Digraph;

    // A copy with the arc u -> v deleted (no-op when absent).
    auto without_arc(Vertex u, Vertex v) const -> Digraph;

    auto out_lists() const -> const std::vector<VertexSet> & { return _out; }

    friend auto operator==(const Digraph & a, const Digraph & b) -> bool { return a._out == b._out; }

private:
    void check_vertex(Vertex u) const;

    std::vector<VertexSet> _out;
    std::vector<VertexSet> _in;
    std::size_t _arcs = 0;
};

// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
auto directed_cycle(std::size_t n) -> Digraph;

// Complete digraph on n vertices (every ordered pair u != v is an arc).
auto complete_digraph(std::size_t n) -> Digraph;

} // namespace kgeo
