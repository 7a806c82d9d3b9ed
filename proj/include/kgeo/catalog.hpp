#pragma once

#include <kgeo/digraph.hpp>

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace kgeo {

struct CatalogEntry {
    std::string id;
    Digraph digraph;
    // names[i] is the figure label of vertex i ("u", "u1", ..., "v4").
    std::vector<std::string> names;
    std::string provenance;

    // Index of a figure label; throws RangeError when absent.
    auto index_of(std::string_view name) const -> Vertex;
};

// The (2,2,+2)-digraph containing a bad pair.
auto catalog_A() -> CatalogEntry;

// The (2,2,+2)-digraph containing no bad pair.
auto catalog_B() -> CatalogEntry;

// "A" or "B" (case-insensitive); throws RangeError otherwise.
auto catalog_entry(std::string_view id) -> CatalogEntry;

// Text format:
//
//     n <N>
//     <v>: <out-neighbours separated by single spaces>
//
// One line per vertex 0..N-1, in any order when reading, ascending when
// writing. Lines starting with '#' and blank lines are ignored on input.
auto read_digraph(std::istream & in) -> Digraph;
auto read_digraph(std::string_view text) -> Digraph;
auto read_digraph_file(const std::string & path) -> Digraph;

// Several digraphs back to back, each starting at its own "n" header.
auto read_digraphs(std::istream & in) -> std::vector<Digraph>;

auto write_digraph(const Digraph & g) -> std::string;

} // namespace kgeo
