#include <kgeo/canon.hpp>

#include <algorithm>
#include <numeric>
#include <optional>

namespace kgeo {

namespace {

    // Ordered partition stored as a cell index per vertex; cells are
    // numbered 0..cells-1 in partition order.
    struct Partition {
        std::vector<std::uint32_t> cell;
        std::uint32_t cells = 0;

        auto discrete() const -> bool { return cells == cell.size(); }
    };

    // Re-rank vertices by key, keeping cell order as the primary key so the
    // result refines the input.
    template <typename Key>
    auto rerank(std::vector<Key> & keys) -> Partition
    {
        const auto n = keys.size();
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), Vertex{0});
        std::sort(order.begin(), order.end(), [&] (Vertex a, Vertex b) { return keys[a] < keys[b]; });
        Partition p;
        p.cell.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && keys[order[i]] != keys[order[i - 1]])
                ++p.cells;
            p.cell[order[i]] = p.cells;
        }
        p.cells = n ? p.cells + 1 : 0;
        return p;
    }

    // Split cells by the sorted multisets of out-neighbour cells, then
    // in-neighbour cells, until nothing changes.
    void refine(const Digraph & g, Partition & p)
    {
        const auto n = g.order();
        using Key = std::tuple<std::uint32_t, std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
        std::vector<Key> keys(n);
        while (! p.discrete()) {
            for (Vertex v = 0; v < n; ++v) {
                auto & [own, outs, ins] = keys[v];
                own = p.cell[v];
                outs.clear();
                ins.clear();
                for (auto w : g.out(v))
                    outs.push_back(p.cell[w]);
                for (auto w : g.in(v))
                    ins.push_back(p.cell[w]);
                std::sort(outs.begin(), outs.end());
                std::sort(ins.begin(), ins.end());
            }
            auto next = rerank(keys);
            if (next.cells == p.cells)
                return;
            p = std::move(next);
        }
    }

    auto initial_partition(const Digraph & g) -> Partition
    {
        std::vector<std::pair<std::size_t, std::size_t>> keys(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            keys[v] = {g.out_degree(v), g.in_degree(v)};
        return rerank(keys);
    }

    auto individualize(const Partition & p, Vertex v) -> Partition
    {
        std::vector<std::pair<std::uint32_t, int>> keys(p.cell.size());
        for (std::size_t w = 0; w < keys.size(); ++w)
            keys[w] = {p.cell[w], w == v ? 0 : 1};
        return rerank(keys);
    }

    // Lowest-indexed cell among the largest ones.
    auto target_cell(const Partition & p) -> std::uint32_t
    {
        std::vector<std::size_t> sizes(p.cells, 0);
        for (auto c : p.cell)
            ++sizes[c];
        return static_cast<std::uint32_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    }

    struct Search {
        const Digraph & g;
        std::optional<CanonicalForm> first_form, best_form;
        std::vector<Vertex> first_position, best_position;
        std::vector<std::vector<Vertex>> automorphisms;
        std::size_t leaves = 0;

        // image[v] = a^{-1}(b(v)) where a, b map vertex -> label.
        auto automorphism_between(const std::vector<Vertex> & a, const std::vector<Vertex> & b) const
            -> std::vector<Vertex>
        {
            std::vector<Vertex> inverse(a.size());
            for (std::size_t v = 0; v < a.size(); ++v)
                inverse[a[v]] = static_cast<Vertex>(v);
            std::vector<Vertex> image(a.size());
            for (std::size_t v = 0; v < a.size(); ++v)
                image[v] = inverse[b[v]];
            return image;
        }

        void record_automorphism(std::vector<Vertex> image)
        {
            bool identity = true;
            for (std::size_t v = 0; v < image.size(); ++v)
                identity = identity && image[v] == v;
            if (! identity && std::find(automorphisms.begin(), automorphisms.end(), image) == automorphisms.end())
                automorphisms.push_back(std::move(image));
        }

        void leaf(const Partition & p)
        {
            ++leaves;
            std::vector<Vertex> position(p.cell.begin(), p.cell.end());
            auto form = encode_adjacency(g, position);
            if (! first_form) {
                first_form = form;
                first_position = position;
                best_form = std::move(form);
                best_position = std::move(position);
                return;
            }
            if (form == *first_form)
                record_automorphism(automorphism_between(first_position, position));
            else if (form == *best_form)
                record_automorphism(automorphism_between(best_position, position));
            else if (form < *best_form) {
                best_form = std::move(form);
                best_position = std::move(position);
            }
        }

        void explore(const Partition & p, std::vector<Vertex> & fixed)
        {
            if (p.discrete()) {
                leaf(p);
                return;
            }
            auto target = target_cell(p);
            std::vector<Vertex> members;
            for (Vertex v = 0; v < p.cell.size(); ++v)
                if (p.cell[v] == target)
                    members.push_back(v);

            std::vector<Vertex> explored;
            for (auto v : members) {
                if (equivalent_to_explored(v, explored, fixed))
                    continue;
                explored.push_back(v);
                auto child = individualize(p, v);
                refine(g, child);
                fixed.push_back(v);
                explore(child, fixed);
                fixed.pop_back();
            }
        }

        // Is v in the orbit of some explored vertex under the group generated
        // by known automorphisms that fix every individualized vertex?
        auto equivalent_to_explored(Vertex v, const std::vector<Vertex> & explored,
            const std::vector<Vertex> & fixed) const -> bool
        {
            if (explored.empty() || automorphisms.empty())
                return false;
            const auto n = g.order();
            std::vector<Vertex> parent(n);
            std::iota(parent.begin(), parent.end(), Vertex{0});
            auto find = [&] (Vertex x) {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            };
            for (auto & a : automorphisms) {
                bool fixes = std::all_of(fixed.begin(), fixed.end(), [&] (Vertex f) { return a[f] == f; });
                if (! fixes)
                    continue;
                for (Vertex x = 0; x < n; ++x)
                    parent[find(x)] = find(a[x]);
            }
            auto root = find(v);
            return std::any_of(explored.begin(), explored.end(), [&] (Vertex e) { return find(e) == root; });
        }
    };

    auto hex_digit(char c) -> int
    {
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        if (c >= 'A' && c <= 'F')
            return c - 'A' + 10;
        return -1;
    }

} // namespace

auto encode_adjacency(const Digraph & g, const std::vector<Vertex> & position) -> CanonicalForm
{
    const auto n = g.order();
    CanonicalForm f;
    f.bytes.assign(4 + (n * n + 7) / 8, 0);
    auto n32 = static_cast<std::uint32_t>(n);
    for (int i = 0; i < 4; ++i)
        f.bytes[i] = static_cast<std::uint8_t>(n32 >> (24 - 8 * i));
    for (Vertex u = 0; u < n; ++u)
        for (auto v : g.out(u)) {
            std::size_t bit = std::size_t{position[u]} * n + position[v];
            f.bytes[4 + bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
        }
    return f;
}

auto CanonicalForm::hex() const -> std::string
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

auto CanonicalForm::from_hex(const std::string & text) -> CanonicalForm
{
    if (text.size() % 2)
        throw ParseError(0, "canonical form hex has odd length");
    CanonicalForm f;
    for (std::size_t i = 0; i < text.size(); i += 2) {
        int hi = hex_digit(text[i]), lo = hex_digit(text[i + 1]);
        if (hi < 0 || lo < 0)
            throw ParseError(0, "invalid hex digit in canonical form");
        f.bytes.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
    }
    if (f.bytes.size() < 4 || f.bytes.size() != 4 + (f.order() * f.order() + 7) / 8)
        throw ParseError(0, "canonical form has the wrong length for its order");
    return f;
}

auto CanonicalForm::order() const -> std::size_t
{
    if (bytes.size() < 4)
        return 0;
    return (std::size_t{bytes[0]} << 24) | (std::size_t{bytes[1]} << 16) | (std::size_t{bytes[2]} << 8) | bytes[3];
}

auto CanonicalForm::decode() const -> Digraph
{
    const auto n = order();
    std::vector<VertexSet> lists(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            std::size_t bit = u * n + v;
            if (bytes[4 + bit / 8] & (0x80u >> (bit % 8)))
                lists[u].push_back(static_cast<Vertex>(v));
        }
    return Digraph(std::move(lists));
}

auto canonical_labeling(const Digraph & g) -> CanonicalLabeling
{
    if (g.order() == 0)
        throw PreconditionError("canonical labeling requires at least one vertex");
    Search search{g, {}, {}, {}, {}, {}, 0};
    auto p = initial_partition(g);
    refine(g, p);
    std::vector<Vertex> fixed;
    search.explore(p, fixed);
    return {std::move(*search.best_form), std::move(search.best_position), std::move(search.automorphisms),
        search.leaves};
}

auto canonical_form(const Digraph & g) -> CanonicalForm
{
    return canonical_labeling(g).form;
}

auto are_isomorphic(const Digraph & g, const Digraph & h) -> bool
{
    if (g.order() != h.order() || g.arc_count() != h.arc_count())
        return false;
    if (g.order() == 0)
        return true;
    return canonical_form(g) == canonical_form(h);
}

auto automorphism_orbits(const Digraph & g) -> OrbitPartition
{
    auto labeling = canonical_labeling(g);
    const auto n = g.order();
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&] (Vertex x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto & a : labeling.automorphisms)
        for (Vertex x = 0; x < n; ++x) {
            auto rx = find(x), ry = find(a[x]);
            if (rx != ry)
                parent[std::max(rx, ry)] = std::min(rx, ry);
        }

    OrbitPartition result;
    result.orbit_id.resize(n);
    for (Vertex x = 0; x < n; ++x) {
        result.orbit_id[x] = find(x);
        result.orbit_count += result.orbit_id[x] == x;
    }
    return result;
}

} // namespace kgeo
