#pragma once

#include <kgeo/digraph.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace kgeo {

// 1 + d + d^2 + ... + d^k. Throws OverflowError when the value does not fit
// in 64 bits and PreconditionError when d == 0.
auto moore_bound(std::uint64_t d, std::uint64_t k) -> std::uint64_t;

// Target of a (d, k, +epsilon) search or verification.
struct SearchParams {
    unsigned d = 2;
    unsigned k = 2;
    unsigned epsilon = 0;
    bool diregular = false;
    std::optional<std::size_t> max_results;
    std::optional<std::uint64_t> max_nodes;

    // Throws PreconditionError unless d >= 1 and k >= 1.
    void validate() const;

    // M(d, k) + epsilon.
    auto order() const -> std::uint64_t;
};

auto out_neighbourhood(const Digraph & g, Vertex u) -> VertexSet;
auto in_neighbourhood(const Digraph & g, Vertex u) -> VertexSet;

// N^l(u): vertices at distance exactly l from u. Sorted.
auto distance_layer(const Digraph & g, Vertex u, std::size_t l) -> VertexSet;

// T_l(u): vertices at distance at most l from u. Sorted.
auto ball(const Digraph & g, Vertex u, std::size_t l) -> VertexSet;

// d(u, v) when it is at most max_depth; nullopt means "beyond max_depth".
auto distance(const Digraph & g, Vertex u, Vertex v, std::size_t max_depth) -> std::optional<std::size_t>;

// Two distinct walks of length <= k from one vertex to another.
struct GeodecityWitness {
    Vertex from;
    Vertex to;
    std::vector<Vertex> first_walk;
    std::vector<Vertex> second_walk;
};

struct GeodecityResult {
    bool geodetic = true;
    std::optional<GeodecityWitness> witness;

    explicit operator bool() const { return geodetic; }
};

// True iff every ordered pair has at most one walk of length <= k between
// them, counting the length-0 walk u -> u, so any closed walk of length
// 1..k is a violation.
auto is_k_geodetic(const Digraph & g, unsigned k) -> GeodecityResult;

// O(u) = V(G) - T_k(u). Sorted.
auto outlier_set(const Digraph & g, Vertex u, unsigned k) -> VertexSet;

// n - M(d, k); negative when the digraph is smaller than the Moore bound.
auto excess(const Digraph & g, unsigned d, unsigned k) -> std::int64_t;

auto is_diregular(const Digraph & g, unsigned d) -> bool;

struct VerificationReport {
    unsigned d = 0;
    unsigned k = 0;
    unsigned epsilon = 0;
    bool diregular_required = false;

    bool order_ok = false;
    std::size_t order = 0;
    std::optional<std::uint64_t> expected_order; // nullopt when M(d,k)+epsilon overflows

    bool outdegree_ok = false;
    std::size_t min_out_degree = 0;

    bool diregular_ok = false;

    bool geodetic_ok = false;
    std::optional<GeodecityWitness> witness;

    // outlier_counts[w] = number of u with w in O(u).
    std::vector<std::size_t> outlier_counts;
    // outlier_set_sizes[u] = |O(u)|.
    std::vector<std::size_t> outlier_set_sizes;

    auto passed() const -> bool
    {
        return order_ok && outdegree_ok && geodetic_ok && (diregular_ok || ! diregular_required);
    }
};

auto verify(const Digraph & g, const SearchParams & params) -> VerificationReport;

} // namespace kgeo
