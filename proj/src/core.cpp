#include <kgeo/core.hpp>
#include <kgeo/walks.hpp>

#include <algorithm>
#include <deque>
#include <limits>

namespace kgeo {

auto moore_bound(std::uint64_t d, std::uint64_t k) -> std::uint64_t
{
    if (d == 0)
        throw PreconditionError("moore_bound requires d >= 1");
    std::uint64_t total = 1, power = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (__builtin_mul_overflow(power, d, &power) || __builtin_add_overflow(total, power, &total))
            throw OverflowError("M(" + std::to_string(d) + "," + std::to_string(k) + ") overflows 64 bits");
    }
    return total;
}

void SearchParams::validate() const
{
    if (d < 1)
        throw PreconditionError("d must be at least 1");
    if (k < 1)
        throw PreconditionError("k must be at least 1");
}

auto SearchParams::order() const -> std::uint64_t
{
    std::uint64_t n;
    if (__builtin_add_overflow(moore_bound(d, k), std::uint64_t{epsilon}, &n))
        throw OverflowError("M(d,k) + epsilon overflows 64 bits");
    return n;
}

auto out_neighbourhood(const Digraph & g, Vertex u) -> VertexSet
{
    auto s = g.out(u);
    return {s.begin(), s.end()};
}

auto in_neighbourhood(const Digraph & g, Vertex u) -> VertexSet
{
    auto s = g.in(u);
    return {s.begin(), s.end()};
}

namespace {

    // BFS distances from u, stopping after depth max_depth; unreached
    // vertices hold max().
    auto bfs(const Digraph & g, Vertex u, std::size_t max_depth) -> std::vector<std::size_t>
    {
        constexpr auto unreached = std::numeric_limits<std::size_t>::max();
        std::vector<std::size_t> dist(g.order(), unreached);
        g.out(u); // range check
        dist[u] = 0;
        std::deque<Vertex> queue{u};
        while (! queue.empty()) {
            auto x = queue.front();
            queue.pop_front();
            if (dist[x] == max_depth)
                continue;
            for (auto y : g.out(x))
                if (dist[y] == unreached) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
        }
        return dist;
    }

    // Walks of length <= k from `from` to `to`, depth first, stopping at two.
    void collect_walks(const Digraph & g, Vertex to, unsigned k, std::vector<Vertex> & path,
        std::vector<std::vector<Vertex>> & found)
    {
        if (found.size() >= 2)
            return;
        if (path.back() == to)
            found.push_back(path);
        if (path.size() > k)
            return;
        for (auto y : g.out(path.back())) {
            path.push_back(y);
            collect_walks(g, to, k, path, found);
            path.pop_back();
            if (found.size() >= 2)
                return;
        }
    }

} // namespace

auto distance_layer(const Digraph & g, Vertex u, std::size_t l) -> VertexSet
{
    auto dist = bfs(g, u, l);
    VertexSet result;
    for (std::size_t v = 0; v < dist.size(); ++v)
        if (dist[v] == l)
            result.push_back(static_cast<Vertex>(v));
    return result;
}

auto ball(const Digraph & g, Vertex u, std::size_t l) -> VertexSet
{
    auto dist = bfs(g, u, l);
    VertexSet result;
    for (std::size_t v = 0; v < dist.size(); ++v)
        if (dist[v] <= l)
            result.push_back(static_cast<Vertex>(v));
    return result;
}

auto distance(const Digraph & g, Vertex u, Vertex v, std::size_t max_depth) -> std::optional<std::size_t>
{
    g.out(v);
    auto dist = bfs(g, u, max_depth);
    if (dist[v] > max_depth)
        return std::nullopt;
    return dist[v];
}

auto is_k_geodetic(const Digraph & g, unsigned k) -> GeodecityResult
{
    if (k < 1)
        throw PreconditionError("is_k_geodetic requires k >= 1");
    const auto n = g.order();
    WalkCounter counter(n);
    counter.run(k, [&] (std::size_t u) { return g.out(static_cast<Vertex>(u)); });
    if (counter.geodetic())
        return {};

    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t w = 0; w < n; ++w)
            if (counter.total(u, w) > 1) {
                std::vector<Vertex> path{static_cast<Vertex>(u)};
                std::vector<std::vector<Vertex>> found;
                collect_walks(g, static_cast<Vertex>(w), k, path, found);
                GeodecityWitness witness{static_cast<Vertex>(u), static_cast<Vertex>(w), found.at(0), found.at(1)};
                return {false, std::move(witness)};
            }
    return {};
}

auto outlier_set(const Digraph & g, Vertex u, unsigned k) -> VertexSet
{
    auto dist = bfs(g, u, k);
    VertexSet result;
    for (std::size_t v = 0; v < dist.size(); ++v)
        if (dist[v] > k)
            result.push_back(static_cast<Vertex>(v));
    return result;
}

auto excess(const Digraph & g, unsigned d, unsigned k) -> std::int64_t
{
    auto m = moore_bound(d, k);
    if (m > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw OverflowError("Moore bound does not fit a signed 64-bit excess");
    return static_cast<std::int64_t>(g.order()) - static_cast<std::int64_t>(m);
}

auto is_diregular(const Digraph & g, unsigned d) -> bool
{
    for (Vertex u = 0; u < g.order(); ++u)
        if (g.out_degree(u) != d || g.in_degree(u) != d)
            return false;
    return true;
}

auto verify(const Digraph & g, const SearchParams & params) -> VerificationReport
{
    VerificationReport r;
    r.d = params.d;
    r.k = params.k;
    r.epsilon = params.epsilon;
    r.diregular_required = params.diregular;
    r.order = g.order();

    try {
        r.expected_order = params.order();
        r.order_ok = *r.expected_order == g.order();
    }
    catch (const OverflowError &) {
        r.order_ok = false;
    }

    r.min_out_degree = g.order() ? std::numeric_limits<std::size_t>::max() : 0;
    for (Vertex u = 0; u < g.order(); ++u)
        r.min_out_degree = std::min(r.min_out_degree, g.out_degree(u));
    r.outdegree_ok = g.order() > 0 && r.min_out_degree >= params.d;
    r.diregular_ok = is_diregular(g, params.d);

    if (params.k >= 1) {
        auto geo = is_k_geodetic(g, params.k);
        r.geodetic_ok = geo.geodetic;
        r.witness = std::move(geo.witness);
    }

    r.outlier_counts.assign(g.order(), 0);
    r.outlier_set_sizes.assign(g.order(), 0);
    for (Vertex u = 0; u < g.order(); ++u) {
        auto o = outlier_set(g, u, params.k);
        r.outlier_set_sizes[u] = o.size();
        for (auto w : o)
            ++r.outlier_counts[w];
    }
    return r;
}

} // namespace kgeo
