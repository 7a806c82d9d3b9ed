#pragma once

#include <kgeo/canon.hpp>
#include <kgeo/core.hpp>
#include <kgeo/walks.hpp>

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kgeo {

// A digraph under construction: every vertex has a (possibly partial)
// out-list of at most d targets, filled in increasing order.
class PartialDigraph {
public:
    PartialDigraph(std::size_t n, unsigned d);

    auto order() const -> std::size_t { return _n; }
    auto degree() const -> unsigned { return _d; }

    auto out(Vertex x) const -> std::span<const Vertex>
    {
        return {_out.data() + std::size_t{x} * _d, _out_size[x]};
    }
    auto out_size(Vertex x) const -> unsigned { return _out_size[x]; }
    auto in_degree(Vertex x) const -> unsigned { return _in_deg[x]; }
    auto has_arc(Vertex x, Vertex t) const -> bool;

    // Lowest vertex whose out-list is not full; order() when complete.
    auto next_source() const -> Vertex { return _next_source; }
    // Vertices [0, introduced()) have been placed; the next new vertex is introduced().
    auto introduced() const -> Vertex { return _introduced; }
    auto complete() const -> bool { return _next_source == _n; }
    auto decided_arcs() const -> std::size_t { return _arcs; }

    // Appends t to x's out-list. Throws PreconditionError when the list is
    // full or t does not exceed its current last entry.
    void add_arc(Vertex x, Vertex t);
    // Removes the last arc out of x.
    void remove_last_arc(Vertex x);
    void set_introduced(Vertex count) { _introduced = count; }

    auto to_digraph() const -> Digraph;

private:
    void advance_source();

    std::size_t _n;
    unsigned _d;
    std::vector<Vertex> _out;
    std::vector<std::uint8_t> _out_size;
    std::vector<std::uint8_t> _in_deg;
    Vertex _next_source = 0;
    Vertex _introduced = 0;
    std::size_t _arcs = 0;
};

// Vertex 0's out-tree to depth k labeled in breadth-first order: vertex i
// (for i < M(d,k-1)) points to d*i+1 .. d*i+d. The remaining epsilon
// vertices are unplaced. Throws PreconditionError for invalid params or an
// order above max_search_order.
auto seed_tree(const SearchParams & params) -> PartialDigraph;

inline constexpr std::size_t max_search_order = 64;

enum class PruneLevel {
    // Only decided-arc geodecity and the in-degree cap.
    reference,
    // Adds in-degree feasibility, outlier multiplicity and the
    // identical-out-neighbourhood consequences.
    full,
};

enum class CutReason {
    none,
    in_degree,
    geodecity,
    in_degree_feasibility,
    out_slot_feasibility,
    outlier_multiplicity,
    identical_neighbourhoods,
};

auto cut_reason_name(CutReason r) -> std::string_view;

struct PruneResult {
    bool keep;
    CutReason reason;
};

// Reusable pruning state; one per worker.
class Pruner {
public:
    Pruner(const SearchParams & params, PruneLevel level, const kernels::RowOps & ops = kernels::active_ops());

    auto check(const PartialDigraph & partial) -> PruneResult;

    auto invocations() const -> std::uint64_t { return _invocations; }

private:
    auto check_feasibility(const PartialDigraph & partial) -> CutReason;
    auto check_outliers(const PartialDigraph & partial) -> bool;
    auto check_identical(const PartialDigraph & partial) -> bool;

    SearchParams _params;
    PruneLevel _level;
    std::size_t _n;
    std::uint64_t _ball_size;
    bool _identical_rules;
    WalkCounter _walks;
    std::vector<std::size_t> _scratch;
    std::uint64_t _invocations = 0;
};

auto prune(const PartialDigraph & partial, const SearchParams & params, PruneLevel level = PruneLevel::full)
    -> PruneResult;

struct SearchResult {
    CanonicalForm form;
    // The canonically labeled digraph.
    Digraph representative;
};

struct SearchOutcome {
    // Sorted by canonical form, pairwise non-isomorphic.
    std::vector<SearchResult> results;
    std::uint64_t nodes_explored = 0;
    bool complete = false;
};

struct SearchProgress {
    std::uint64_t nodes;
    std::size_t tasks_done;
    std::size_t tasks_total;
    std::size_t results;
};

struct SearchOptions {
    unsigned jobs = 1;
    // Arcs placed beyond the seed before the tree is cut into tasks.
    unsigned split_depth = 3;
    PruneLevel level = PruneLevel::full;
    // Progress is saved here after every finished task and resumed from it
    // when the file already exists.
    std::optional<std::string> checkpoint_path;
    std::function<void(const SearchProgress &)> progress;
    // Called for every accepted labeled leaf, before deduplication. Called
    // from worker threads, serialized by the caller-visible sink lock.
    std::function<void(const Digraph &)> on_leaf;
};

// Exhaustive, isomorph-free enumeration of k-geodetic digraphs of order
// M(d,k)+epsilon with out-degree exactly d (and in-degree d when
// params.diregular). Budget or result caps yield complete = false.
auto search(const SearchParams & params, const SearchOptions & options = {}) -> SearchOutcome;

// A4 as the 12 even permutations of {0,1,2,3} in lexicographic one-line order.
using Permutation = std::array<std::uint8_t, 4>;

auto alternating_group_a4() -> std::vector<Permutation>;

// (p * q)[i] = p[q[i]].
auto compose(const Permutation & p, const Permutation & q) -> Permutation;

// Cay(A4, {a, b}) with arcs g -> g*a and g -> g*b; vertex i is the i-th
// element of alternating_group_a4().
auto cayley_digraph_a4(std::size_t a, std::size_t b) -> Digraph;

struct CayleyWitness {
    // Indices into alternating_group_a4(), a < b.
    std::size_t a;
    std::size_t b;
    Permutation a_perm;
    Permutation b_perm;
    Digraph digraph;
};

// Unordered generating pairs {a, b} of A4 whose Cayley digraph verifies as
// a diregular (2, k, +epsilon)-digraph.
auto search_cayley_a4(unsigned k, unsigned epsilon) -> std::vector<CayleyWitness>;

} // namespace kgeo
