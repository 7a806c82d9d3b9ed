#include <kgeo/catalog.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace kgeo {

namespace {

    auto make_entry(std::string id, std::vector<std::string> names, std::vector<VertexSet> lists,
        std::string provenance) -> CatalogEntry
    {
        return {std::move(id), Digraph(std::move(lists)), std::move(names), std::move(provenance)};
    }

    auto trim(std::string_view s) -> std::string_view
    {
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    }

    auto parse_number(std::string_view token, std::size_t line) -> std::uint64_t
    {
        std::uint64_t value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || end != token.data() + token.size() || token.empty())
            throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
        return value;
    }

    auto split(std::string_view s) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < s.size()) {
            while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
                ++i;
            std::size_t j = i;
            while (j < s.size() && ! std::isspace(static_cast<unsigned char>(s[j])))
                ++j;
            if (j > i)
                tokens.push_back(s.substr(i, j - i));
            i = j;
        }
        return tokens;
    }

    // Incremental parser shared by read_digraph and read_digraphs.
    class Reader {
    public:
        // Feeds one line. Returns true if the line was a header that started
        // a new digraph while one was in progress (the caller must finish()
        // first and re-feed the line).
        auto feed(std::string_view raw, std::size_t line) -> bool
        {
            auto text = trim(raw);
            if (text.empty() || text.front() == '#')
                return false;

            if (text.front() == 'n' && (text.size() == 1 || std::isspace(static_cast<unsigned char>(text[1])))) {
                if (_n)
                    return true;
                auto tokens = split(text);
                if (tokens.size() != 2)
                    throw ParseError(line, "header must be 'n <order>'");
                auto n = parse_number(tokens[1], line);
                if (n > (std::uint64_t{1} << 24))
                    throw ParseError(line, "order " + std::to_string(n) + " is unreasonably large");
                _n = static_cast<std::size_t>(n);
                _lists.assign(*_n, {});
                _seen.assign(*_n, false);
                _header_line = line;
                return false;
            }

            if (! _n)
                throw ParseError(line, "expected 'n <order>' header before vertex lines");

            auto colon = text.find(':');
            if (colon == std::string_view::npos)
                throw ParseError(line, "vertex line must look like '<v>: <targets>'");
            auto v = parse_number(trim(text.substr(0, colon)), line);
            if (v >= *_n)
                throw ParseError(line, "vertex " + std::to_string(v) + " outside [0, " + std::to_string(*_n) + ")");
            if (_seen[v])
                throw ParseError(line, "vertex " + std::to_string(v) + " listed more than once");
            _seen[v] = true;
            for (auto token : split(text.substr(colon + 1))) {
                auto t = parse_number(token, line);
                if (t >= *_n)
                    throw ParseError(line, "vertex " + std::to_string(v) + " has out-neighbour " + std::to_string(t)
                        + " outside [0, " + std::to_string(*_n) + ")");
                auto & list = _lists[v];
                if (std::find(list.begin(), list.end(), t) != list.end())
                    throw ParseError(line, "vertex " + std::to_string(v) + " has duplicate arc to " + std::to_string(t));
                list.push_back(static_cast<Vertex>(t));
            }
            return false;
        }

        auto in_progress() const -> bool { return _n.has_value(); }

        auto finish() -> Digraph
        {
            if (! _n)
                throw ParseError(0, "no digraph found (missing 'n <order>' header)");
            // A header with no vertex lines at all means n isolated vertices.
            const bool any = std::find(_seen.begin(), _seen.end(), true) != _seen.end();
            for (std::size_t v = 0; v < *_n && any; ++v)
                if (! _seen[v])
                    throw ParseError(_header_line, "vertex " + std::to_string(v) + " has no line");
            Digraph g(std::move(_lists));
            _n.reset();
            _lists.clear();
            _seen.clear();
            return g;
        }

    private:
        std::optional<std::size_t> _n;
        std::vector<VertexSet> _lists;
        std::vector<bool> _seen;
        std::size_t _header_line = 0;
    };

} // namespace

auto CatalogEntry::index_of(std::string_view name) const -> Vertex
{
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
        throw RangeError("catalog " + id + " has no vertex named '" + std::string(name) + "'");
    return static_cast<Vertex>(it - names.begin());
}

auto catalog_A() -> CatalogEntry
{
    return make_entry("A", {"u", "u1", "u2", "v1", "u4", "u5", "u6", "v", "v4"},
        {{1, 2}, {3, 4}, {5, 6}, {0, 8}, {5, 7}, {1, 8}, {0, 4}, {2, 3}, {6, 7}},
        "Figure 2: the unique (2,2,+2)-digraph containing a bad pair");
}

auto catalog_B() -> CatalogEntry
{
    return make_entry("B", {"u", "u1", "u2", "v", "u4", "u5", "u6", "v1", "v4"},
        {{1, 2}, {3, 4}, {5, 6}, {2, 7}, {5, 6}, {0, 8}, {1, 7}, {0, 8}, {3, 4}},
        "Figure 4: the (2,2,+2)-digraph with no bad pair");
}

auto catalog_entry(std::string_view id) -> CatalogEntry
{
    if (id == "A" || id == "a")
        return catalog_A();
    if (id == "B" || id == "b")
        return catalog_B();
    throw RangeError("unknown catalog entry '" + std::string(id) + "' (expected A or B)");
}

auto read_digraph(std::istream & in) -> Digraph
{
    Reader reader;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (reader.feed(line, number))
            throw ParseError(number, "second 'n' header in a single-digraph input");
    }
    return reader.finish();
}

auto read_digraph(std::string_view text) -> Digraph
{
    std::istringstream in{std::string(text)};
    return read_digraph(in);
}

auto read_digraph_file(const std::string & path) -> Digraph
{
    std::ifstream in(path);
    if (! in)
        throw Error("cannot open '" + path + "'");
    return read_digraph(in);
}

auto read_digraphs(std::istream & in) -> std::vector<Digraph>
{
    std::vector<Digraph> result;
    Reader reader;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (reader.feed(line, number)) {
            result.push_back(reader.finish());
            reader.feed(line, number);
        }
    }
    if (reader.in_progress())
        result.push_back(reader.finish());
    return result;
}

auto write_digraph(const Digraph & g) -> std::string
{
    std::string s = "n " + std::to_string(g.order()) + "\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        s += std::to_string(v) + ":";
        for (auto w : g.out(v))
            s += " " + std::to_string(w);
        s += "\n";
    }
    return s;
}

} // namespace kgeo
