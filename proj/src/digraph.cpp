#include <kgeo/digraph.hpp>

#include <algorithm>

namespace kgeo {

Digraph::Digraph(std::vector<VertexSet> out_lists) :
    _out(std::move(out_lists)), _in(_out.size())
{
    const auto n = _out.size();
    for (std::size_t u = 0; u < n; ++u) {
        auto & list = _out[u];
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw Error("repeated arc out of vertex " + std::to_string(u));
        for (auto v : list) {
            if (v >= n)
                throw RangeError("vertex " + std::to_string(u) + " has out-neighbour " + std::to_string(v)
                    + " outside [0, " + std::to_string(n) + ")");
            _in[v].push_back(static_cast<Vertex>(u));
        }
        _arcs += list.size();
    }
}

auto Digraph::from_arcs(std::size_t n, std::span<const std::pair<Vertex, Vertex>> arcs) -> Digraph
{
    std::vector<VertexSet> lists(n);
    for (auto [u, v] : arcs) {
        if (u >= n)
            throw RangeError("arc source " + std::to_string(u) + " outside [0, " + std::to_string(n) + ")");
        lists[u].push_back(v);
    }
    return Digraph(std::move(lists));
}

void Digraph::check_vertex(Vertex u) const
{
    if (u >= _out.size())
        throw RangeError("vertex " + std::to_string(u) + " outside [0, " + std::to_string(_out.size()) + ")");
}

auto Digraph::out(Vertex u) const -> std::span<const Vertex>
{
    check_vertex(u);
    return _out[u];
}

auto Digraph::in(Vertex u) const -> std::span<const Vertex>
{
    check_vertex(u);
    return _in[u];
}

auto Digraph::has_arc(Vertex u, Vertex v) const -> bool
{
    auto list = out(u);
    return std::binary_search(list.begin(), list.end(), v);
}

auto Digraph::relabel(std::span<const Vertex> perm) const -> Digraph
{
    if (perm.size() != order())
        throw Error("relabeling has the wrong length");
    std::vector<VertexSet> lists(order());
    std::vector<bool> seen(order(), false);
    for (std::size_t u = 0; u < order(); ++u) {
        check_vertex(perm[u]);
        if (seen[perm[u]])
            throw Error("relabeling is not a bijection");
        seen[perm[u]] = true;
        for (auto v : _out[u])
            lists[perm[u]].push_back(perm[v]);
    }
    return Digraph(std::move(lists));
}

auto Digraph::without_arc(Vertex u, Vertex v) const -> Digraph
{
    check_vertex(u);
    auto lists = _out;
    std::erase(lists[u], v);
    return Digraph(std::move(lists));
}

auto directed_cycle(std::size_t n) -> Digraph
{
    std::vector<VertexSet> lists(n);
    for (std::size_t u = 0; u < n; ++u)
        lists[u].push_back(static_cast<Vertex>((u + 1) % n));
    return Digraph(std::move(lists));
}

auto complete_digraph(std::size_t n) -> Digraph
{
    std::vector<VertexSet> lists(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v)
                lists[u].push_back(static_cast<Vertex>(v));
    return Digraph(std::move(lists));
}

} // namespace kgeo
