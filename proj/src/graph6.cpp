#include "gsearch/graph6.hpp"

#include <istream>
#include <ostream>

#include "gsearch/error.hpp"

namespace gsearch {

namespace {

constexpr int kBias = 63;

std::size_t triangle_bits(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

std::string_view strip_header(std::string_view atom) {
  if (atom.starts_with(kGraph6Header)) atom.remove_prefix(kGraph6Header.size());
  return atom;
}

}  // namespace

std::size_t graph6_length(int n) { return 1 + (triangle_bits(n) + 5) / 6; }

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxVertices) {
    throw CapacityError("graph6 encoding supports at most " + std::to_string(kGraph6MaxVertices) +
                        " vertices (multi-byte size headers are not implemented); got " +
                        std::to_string(n));
  }
  std::string out;
  out.reserve(graph6_length(n));
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph decode_graph6(std::string_view atom, Padding padding) {
  atom = strip_header(atom);
  if (atom.empty()) throw FormatError("empty graph6 atom");
  for (char c : atom) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) {
      throw FormatError("graph6 character with code " + std::to_string(b) + " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(atom[0]) - kBias;
  if (n == 63) {
    throw CapacityError("graph6 multi-byte size header (more than " + std::to_string(kGraph6MaxVertices) +
                        " vertices) is not supported");
  }
  if (atom.size() != graph6_length(n)) {
    throw FormatError("graph6 atom for " + std::to_string(n) + " vertices must have " +
                      std::to_string(graph6_length(n)) + " characters, got " + std::to_string(atom.size()));
  }
  if (padding == Padding::strict && graph6_padding_dirty(atom)) {
    throw FormatError("graph6 atom has nonzero padding bits");
  }
  Graph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int group = static_cast<unsigned char>(atom[1 + bit / 6]) - kBias;
      if ((group >> (5 - bit % 6)) & 1) g.set_edge(i, j, true);
    }
  }
  return g;
}

bool graph6_padding_dirty(std::string_view atom) {
  atom = strip_header(atom);
  if (atom.size() < 2) return false;
  const int n = static_cast<unsigned char>(atom[0]) - kBias;
  const std::size_t used = triangle_bits(n) % 6;
  if (used == 0) return false;
  const int last = static_cast<unsigned char>(atom.back()) - kBias;
  return (last & ((1 << (6 - used)) - 1)) != 0;
}

std::vector<std::string> read_graph6_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    // graph6 has no whitespace characters, so surrounding blanks are noise.
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::string_view body = strip_header(std::string_view(line).substr(first, last - first + 1));
    if (body.empty()) continue;
    out.emplace_back(body);
  }
  return out;
}

std::vector<Graph> read_graph6_graphs(std::istream& in, Padding padding) {
  std::vector<Graph> out;
  for (const auto& line : read_graph6_lines(in)) out.push_back(decode_graph6(line, padding));
  return out;
}

void write_graph6_lines(std::ostream& out, std::span<const Graph> graphs) {
  for (const auto& g : graphs) out << encode_graph6(g) << '\n';
}

}  // namespace gsearch
