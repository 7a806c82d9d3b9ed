#include <kgeo/search.hpp>

#include <algorithm>
#include <numeric>

namespace kgeo {

namespace {

    auto is_even(const Permutation & p) -> bool
    {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                inversions += p[i] > p[j];
        return inversions % 2 == 0;
    }

    // Size of the subgroup generated by a and b, by closure under right
    // multiplication.
    auto generated_size(const std::vector<Permutation> & group, std::size_t a, std::size_t b) -> std::size_t
    {
        std::vector<bool> seen(group.size(), false);
        std::vector<std::size_t> stack;
        auto identity = std::find(group.begin(), group.end(), Permutation{0, 1, 2, 3}) - group.begin();
        seen[identity] = true;
        stack.push_back(identity);
        std::size_t count = 1;
        while (! stack.empty()) {
            auto g = stack.back();
            stack.pop_back();
            for (auto s : {a, b}) {
                auto h = std::find(group.begin(), group.end(), compose(group[g], group[s])) - group.begin();
                if (! seen[h]) {
                    seen[h] = true;
                    ++count;
                    stack.push_back(h);
                }
            }
        }
        return count;
    }

} // namespace

auto alternating_group_a4() -> std::vector<Permutation>
{
    std::vector<Permutation> result;
    Permutation p{0, 1, 2, 3};
    do {
        if (is_even(p))
            result.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return result;
}

auto compose(const Permutation & p, const Permutation & q) -> Permutation
{
    return {p[q[0]], p[q[1]], p[q[2]], p[q[3]]};
}

auto cayley_digraph_a4(std::size_t a, std::size_t b) -> Digraph
{
    auto group = alternating_group_a4();
    if (a >= group.size() || b >= group.size())
        throw RangeError("A4 element index outside [0, 12)");
    std::vector<VertexSet> lists(group.size());
    for (std::size_t g = 0; g < group.size(); ++g)
        for (auto s : {a, b}) {
            auto h = std::find(group.begin(), group.end(), compose(group[g], group[s])) - group.begin();
            auto & list = lists[g];
            if (std::find(list.begin(), list.end(), static_cast<Vertex>(h)) == list.end())
                list.push_back(static_cast<Vertex>(h));
        }
    return Digraph(std::move(lists));
}

auto search_cayley_a4(unsigned k, unsigned epsilon) -> std::vector<CayleyWitness>
{
    auto group = alternating_group_a4();
    SearchParams params;
    params.d = 2;
    params.k = k;
    params.epsilon = epsilon;
    params.diregular = true;
    params.validate();

    std::vector<CayleyWitness> witnesses;
    for (std::size_t a = 0; a < group.size(); ++a)
        for (std::size_t b = a + 1; b < group.size(); ++b) {
            if (generated_size(group, a, b) != group.size())
                continue;
            auto g = cayley_digraph_a4(a, b);
            if (verify(g, params).passed())
                witnesses.push_back({a, b, group[a], group[b], std::move(g)});
        }
    return witnesses;
}

} // namespace kgeo
