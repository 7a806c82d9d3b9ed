#include <kgeo/core.hpp>
#include <kgeo/lemmas.hpp>

#include <algorithm>
#include <iterator>

namespace kgeo {

namespace {

    auto intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) -> std::size_t
    {
        std::size_t count = 0;
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i < *j)
                ++i;
            else if (*j < *i)
                ++j;
            else {
                ++count;
                ++i;
                ++j;
            }
        }
        return count;
    }

    auto contains(const VertexSet & s, Vertex x) -> bool
    {
        return std::binary_search(s.begin(), s.end(), x);
    }

    auto name(Vertex x) -> std::string { return std::to_string(x); }

    auto not_applicable(std::string reason) -> LemmaCheck
    {
        LemmaCheck c;
        c.reason = std::move(reason);
        return c;
    }

    // The one element of a two-element out-list other than `shared`.
    auto other_than(std::span<const Vertex> list, Vertex shared) -> Vertex
    {
        return list[0] == shared ? list[1] : list[0];
    }

} // namespace

auto CycleCensus::vertices_on(std::size_t count) const -> std::vector<Vertex>
{
    std::vector<Vertex> result;
    for (std::size_t v = 0; v < per_vertex.size(); ++v)
        if (per_vertex[v] == count)
            result.push_back(static_cast<Vertex>(v));
    return result;
}

auto common_out_pairs(const Digraph & g, std::size_t c) -> std::vector<PairClass>
{
    std::vector<PairClass> result;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (intersection_size(g.out(u), g.out(v)) == c)
                result.push_back({u, v, c, std::nullopt});
    return result;
}

auto identical_out_pairs(const Digraph & g) -> std::vector<std::pair<Vertex, Vertex>>
{
    std::vector<std::pair<Vertex, Vertex>> result;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            auto a = g.out(u), b = g.out(v);
            if (! a.empty() && std::equal(a.begin(), a.end(), b.begin(), b.end()))
                result.emplace_back(u, v);
        }
    return result;
}

auto excess_two_depth(const Digraph & g) -> std::optional<unsigned>
{
    for (unsigned k = 2; k < 62; ++k) {
        auto m = moore_bound(2, k) + 2;
        if (m > g.order())
            return std::nullopt;
        if (m == g.order()) {
            SearchParams p;
            p.d = 2;
            p.k = k;
            p.epsilon = 2;
            p.diregular = true;
            if (verify(g, p).passed())
                return k;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

auto check_lemma_identical_neighbourhoods(const Digraph & g, unsigned k) -> LemmaCheck
{
    if (k < 2 || excess_two_depth(g) != k)
        return not_applicable("not a diregular (2," + std::to_string(k) + ",+2)-digraph");

    LemmaCheck check;
    check.applicable = true;
    std::vector<VertexSet> outliers(g.order());
    for (Vertex x = 0; x < g.order(); ++x)
        outliers[x] = outlier_set(g, x, k);

    for (auto [u, v] : identical_out_pairs(g)) {
        auto out = g.out(u);
        Vertex a = out[0], b = out[1];
        auto pair = "{" + name(u) + "," + name(v) + "}";
        if (! contains(outliers[b], a))
            check.violations.push_back(pair + ": " + name(a) + " not in O(" + name(b) + ")");
        if (! contains(outliers[a], b))
            check.violations.push_back(pair + ": " + name(b) + " not in O(" + name(a) + ")");
        if (! contains(outliers[u], v))
            check.violations.push_back(pair + ": " + name(v) + " not in O(" + name(u) + ")");
        if (! contains(outliers[v], u))
            check.violations.push_back(pair + ": " + name(u) + " not in O(" + name(v) + ")");
        VertexSet rest_u, rest_v;
        std::copy_if(outliers[u].begin(), outliers[u].end(), std::back_inserter(rest_u), [&] (Vertex x) { return x != v; });
        std::copy_if(outliers[v].begin(), outliers[v].end(), std::back_inserter(rest_v), [&] (Vertex x) { return x != u; });
        if (rest_u != rest_v)
            check.violations.push_back(pair + ": O(" + name(u) + ")-{" + name(v) + "} != O(" + name(v) + ")-{" + name(u) + "}");
    }
    check.holds = check.violations.empty();
    return check;
}

auto check_lemma_pair_exists(const Digraph & g) -> LemmaCheck
{
    if (! excess_two_depth(g))
        return not_applicable("not a diregular (2,k,+2)-digraph with k >= 2");
    LemmaCheck check;
    check.applicable = true;
    check.holds = ! common_out_pairs(g, 1).empty();
    if (! check.holds)
        check.violations.push_back("no pair of vertices has exactly one common out-neighbour");
    return check;
}

auto classify_pair(const Digraph & g, Vertex u, Vertex v, unsigned k) -> PairClass
{
    if (k != 2)
        throw PreconditionError("classify_pair requires k = 2");
    if (u == v)
        throw PreconditionError("classify_pair requires distinct vertices");
    auto common = intersection_size(g.out(u), g.out(v));
    if (common != 1)
        throw PreconditionError("classify_pair requires |N+(u) ∩ N+(v)| = 1, got " + std::to_string(common));
    if (excess_two_depth(g) != 2u)
        throw PreconditionError("classify_pair requires a diregular (2,2,+2)-digraph");

    auto out_u = g.out(u), out_v = g.out(v);
    Vertex shared = 0;
    std::set_intersection(out_u.begin(), out_u.end(), out_v.begin(), out_v.end(), &shared);
    Vertex u1 = other_than(out_u, shared);
    Vertex v1 = other_than(out_v, shared);
    auto o_u = outlier_set(g, u, k);
    auto o_v = outlier_set(g, v, k);

    // Conditions are evaluated over both labelings of N+(u1) and N+(v1),
    // which amounts to trying every member of each.
    auto misses = [] (const VertexSet & o, Vertex a, Vertex b) { return ! contains(o, a) && ! contains(o, b); };
    bool bad = false;
    for (auto v3 : g.out(v1))
        bad = bad || misses(o_u, v1, v3);
    for (auto u3 : g.out(u1))
        bad = bad || misses(o_v, u1, u3);
    return {u, v, 1, bad};
}

auto classify_all_pairs(const Digraph & g) -> std::vector<PairClass>
{
    auto pairs = common_out_pairs(g, 1);
    for (auto & p : pairs)
        p = classify_pair(g, p.u, p.v, 2);
    return pairs;
}

auto triangle_census(const Digraph & g) -> CycleCensus
{
    CycleCensus census;
    census.per_vertex.assign(g.order(), 0);
    for (Vertex a = 0; a < g.order(); ++a)
        for (auto b : g.out(a)) {
            if (b <= a)
                continue;
            for (auto c : g.out(b)) {
                if (c <= a || c == b)
                    continue;
                if (g.has_arc(c, a)) {
                    census.triangles.push_back({a, b, c});
                    ++census.per_vertex[a];
                    ++census.per_vertex[b];
                    ++census.per_vertex[c];
                }
            }
        }
    std::sort(census.triangles.begin(), census.triangles.end());
    return census;
}

auto outlier_multiplicity(const Digraph & g, unsigned k) -> std::vector<std::size_t>
{
    std::vector<std::size_t> counts(g.order(), 0);
    for (Vertex u = 0; u < g.order(); ++u)
        for (auto w : outlier_set(g, u, k))
            ++counts[w];
    return counts;
}

} // namespace kgeo
