#pragma once

// Brute-force reference implementations used only by tests. None of these
// share code paths with the library beyond the Digraph container.

#include <kgeo/digraph.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using kgeo::Digraph;
using kgeo::Vertex;
using kgeo::VertexSet;

inline auto moore_sum(std::uint64_t d, std::uint64_t k) -> std::uint64_t
{
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i <= k; ++i) {
        std::uint64_t p = 1;
        for (std::uint64_t j = 0; j < i; ++j)
            p *= d;
        total += p;
    }
    return total;
}

// k-geodecity by simple-path enumeration: no pair u != v joined by two
// distinct paths (no repeated vertex) of length <= k, and no cycle of
// length <= k (a self-loop counts as a 1-cycle).
inline auto geodetic_by_paths(const Digraph & g, unsigned k) -> bool
{
    const auto n = g.order();
    for (Vertex s = 0; s < n; ++s) {
        std::vector<int> paths(n, 0);
        std::vector<bool> on_path(n, false);
        bool cycle = false;
        std::function<void(Vertex, unsigned)> dfs = [&] (Vertex x, unsigned len) {
            if (len == k)
                return;
            for (auto y : g.out(x)) {
                if (y == s) {
                    cycle = true;
                    continue;
                }
                if (on_path[y])
                    continue;
                ++paths[y];
                on_path[y] = true;
                dfs(y, len + 1);
                on_path[y] = false;
            }
        };
        on_path[s] = true;
        dfs(s, 0);
        if (cycle)
            return false;
        for (Vertex v = 0; v < n; ++v)
            if (v != s && paths[v] > 1)
                return false;
    }
    return true;
}

// All-pairs shortest distances by repeated relaxation; -1 = unreachable.
inline auto distances(const Digraph & g) -> std::vector<std::vector<int>>
{
    const auto n = g.order();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (Vertex u = 0; u < n; ++u)
        dist[u][u] = 0;
    for (Vertex u = 0; u < n; ++u)
        for (auto v : g.out(u))
            if (v != u)
                dist[u][v] = 1;
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (dist[a][m] >= 0 && dist[m][b] >= 0 && (dist[a][b] < 0 || dist[a][m] + dist[m][b] < dist[a][b]))
                    dist[a][b] = dist[a][m] + dist[m][b];
    return dist;
}

inline auto outliers(const Digraph & g, Vertex u, unsigned k) -> VertexSet
{
    auto dist = distances(g);
    VertexSet result;
    for (Vertex v = 0; v < g.order(); ++v)
        if (dist[u][v] < 0 || dist[u][v] > static_cast<int>(k))
            result.push_back(v);
    return result;
}

inline auto adjacency(const Digraph & g) -> std::vector<std::vector<bool>>
{
    std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
    for (Vertex u = 0; u < g.order(); ++u)
        for (auto v : g.out(u))
            a[u][v] = true;
    return a;
}

// Every permutation p with arcs of g mapped exactly onto arcs of h.
inline auto isomorphisms(const Digraph & g, const Digraph & h, bool stop_at_first) -> std::vector<std::vector<Vertex>>
{
    std::vector<std::vector<Vertex>> found;
    if (g.order() != h.order() || g.arc_count() != h.arc_count())
        return found;
    auto a = adjacency(g), b = adjacency(h);
    std::vector<Vertex> p(g.order());
    std::iota(p.begin(), p.end(), Vertex{0});
    do {
        bool ok = true;
        for (Vertex u = 0; u < g.order() && ok; ++u)
            for (Vertex v = 0; v < g.order() && ok; ++v)
                ok = a[u][v] == b[p[u]][p[v]];
        if (ok) {
            found.push_back(p);
            if (stop_at_first)
                break;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return found;
}

inline auto isomorphic(const Digraph & g, const Digraph & h) -> bool
{
    return ! isomorphisms(g, h, true).empty();
}

// orbit[v] = smallest vertex reachable from v under some automorphism.
inline auto orbits(const Digraph & g) -> std::vector<Vertex>
{
    std::vector<Vertex> orbit(g.order());
    std::iota(orbit.begin(), orbit.end(), Vertex{0});
    for (auto & p : isomorphisms(g, g, false))
        for (Vertex v = 0; v < g.order(); ++v)
            orbit[p[v]] = std::min(orbit[p[v]], v);
    // images of v under the group are exactly v's orbit; take the min again
    // so orbit[v] is the orbit minimum for every member
    for (Vertex v = 0; v < g.order(); ++v)
        orbit[v] = orbit[orbit[v]];
    return orbit;
}

// Directed 3-cycles over all ordered triples, as rotations starting at the minimum.
inline auto triangles(const Digraph & g) -> std::set<std::array<Vertex, 3>>
{
    std::set<std::array<Vertex, 3>> result;
    auto a = adjacency(g);
    const auto n = g.order();
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y)
            for (Vertex z = 0; z < n; ++z) {
                if (x == y || y == z || x == z)
                    continue;
                if (a[x][y] && a[y][z] && a[z][x]) {
                    std::array<Vertex, 3> t{x, y, z};
                    std::rotate(t.begin(), std::min_element(t.begin(), t.end()), t.end());
                    result.insert(t);
                }
            }
    return result;
}

inline auto random_digraph(std::mt19937 & rng, std::size_t n, double p, bool loops = false) -> Digraph
{
    std::bernoulli_distribution coin(p);
    std::vector<VertexSet> lists(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if ((loops || u != v) && coin(rng))
                lists[u].push_back(v);
    return Digraph(std::move(lists));
}

// Random digraph with every out-degree equal to d (no loops).
inline auto random_out_regular(std::mt19937 & rng, std::size_t n, unsigned d) -> Digraph
{
    std::vector<VertexSet> lists(n);
    for (Vertex u = 0; u < n; ++u) {
        std::vector<Vertex> others;
        for (Vertex v = 0; v < n; ++v)
            if (v != u)
                others.push_back(v);
        std::shuffle(others.begin(), others.end(), rng);
        lists[u].assign(others.begin(), others.begin() + d);
    }
    return Digraph(std::move(lists));
}

inline auto random_permutation(std::mt19937 & rng, std::size_t n) -> std::vector<Vertex>
{
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Every loop-free digraph on n vertices with all out-degrees d, visited
// row by row; `keep_partial(rows, lists)` may cut a prefix of full rows.
inline void each_out_regular(std::size_t n, unsigned d,
    const std::function<bool(std::size_t, const std::vector<VertexSet> &)> & keep_partial,
    const std::function<void(const Digraph &)> & visit)
{
    std::vector<std::vector<VertexSet>> choices(n);
    for (Vertex u = 0; u < n; ++u) {
        std::vector<Vertex> others;
        for (Vertex v = 0; v < n; ++v)
            if (v != u)
                others.push_back(v);
        std::vector<bool> mask(others.size(), false);
        std::fill(mask.begin(), mask.begin() + std::min<std::size_t>(d, mask.size()), true);
        do {
            VertexSet s;
            for (std::size_t i = 0; i < others.size(); ++i)
                if (mask[i])
                    s.push_back(others[i]);
            choices[u].push_back(s);
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    std::vector<VertexSet> lists(n);
    std::function<void(std::size_t)> rec = [&] (std::size_t row) {
        if (row == n) {
            visit(Digraph(lists));
            return;
        }
        for (auto & c : choices[row]) {
            lists[row] = c;
            if (keep_partial(row + 1, lists))
                rec(row + 1);
        }
        lists[row].clear();
    };
    rec(0);
}

// Walk counting on the digraph given by `lists` restricted to rows [0, rows):
// true iff no pair has two walks of length <= k (length 0 included).
inline auto partial_rows_geodetic(std::size_t rows, const std::vector<VertexSet> & lists, unsigned k) -> bool
{
    const auto n = lists.size();
    for (Vertex s = 0; s < n; ++s) {
        std::vector<int> count(n, 0), layer(n, 0);
        layer[s] = 1;
        count[s] = 1;
        for (unsigned step = 0; step < k; ++step) {
            std::vector<int> next(n, 0);
            for (Vertex x = 0; x < n; ++x)
                if (layer[x] && x < rows)
                    for (auto y : lists[x])
                        next[y] += layer[x];
            for (Vertex x = 0; x < n; ++x) {
                count[x] += next[x];
                if (count[x] > 1)
                    return false;
            }
            layer = next;
        }
    }
    return true;
}

// Column sums (in-degrees) of full rows [0, rows) never exceed d.
inline auto partial_rows_indegree_ok(std::size_t rows, const std::vector<VertexSet> & lists, unsigned d) -> bool
{
    std::vector<unsigned> in(lists.size(), 0);
    for (std::size_t x = 0; x < rows; ++x)
        for (auto y : lists[x])
            if (++in[y] > d)
                return false;
    return true;
}

} // namespace oracle
