#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsearch/graph.hpp"

namespace gsearch {

// graph6 text for graphs with at most this many vertices (one-byte size
// header). Longer headers are rejected.
inline constexpr int kGraph6MaxVertices = 62;

// Optional stream header some gtools programs print before the first graph.
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

enum class Padding { strict, lenient };

std::string encode_graph6(const Graph& g);

// Throws FormatError on a bad size header, a wrong body length, a character
// outside 63..126, or (in strict mode) nonzero padding bits. A leading
// ">>graph6<<" header is skipped.
Graph decode_graph6(std::string_view atom, Padding padding = Padding::strict);

// True if the atom's unused trailing bits are not all zero. Assumes the
// atom is otherwise well-formed.
bool graph6_padding_dirty(std::string_view atom);

// Number of characters in the encoding of an n-vertex graph.
std::size_t graph6_length(int n);

// Reads one atom per line. Blank lines are skipped, as are trailing '\r'
// and a ">>graph6<<" prefix.
std::vector<std::string> read_graph6_lines(std::istream& in);
std::vector<Graph> read_graph6_graphs(std::istream& in, Padding padding = Padding::strict);

void write_graph6_lines(std::ostream& out, std::span<const Graph> graphs);

}  // namespace gsearch
