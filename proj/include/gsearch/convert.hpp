#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gsearch/graph.hpp"

namespace gsearch {

enum class GraphFormat { adj_matrix, adj_list, edge_list, graph6_atom };

struct AdjMatrix {
  std::vector<std::vector<int>> rows;
  friend bool operator==(const AdjMatrix&, const AdjMatrix&) = default;
};

// neighbors[v] lists the neighbors of v; normalized form is sorted and
// duplicate-free.
struct AdjList {
  std::vector<std::vector<int>> neighbors;
  friend bool operator==(const AdjList&, const AdjList&) = default;
};

// Normalized form: sorted pairs (u, v) with u < v, no duplicates.
struct EdgeList {
  std::vector<std::pair<int, int>> edges;
  friend bool operator==(const EdgeList&, const EdgeList&) = default;
};

struct Graph6Atom {
  std::string text;
  friend bool operator==(const Graph6Atom&, const Graph6Atom&) = default;
};

using GraphValue = std::variant<AdjMatrix, AdjList, EdgeList, Graph6Atom>;

GraphFormat format_of(const GraphValue& value) noexcept;
std::string_view format_name(GraphFormat f) noexcept;
// Accepts both the CLI spelling (adj-matrix, graph6) and the enum spelling
// (adj_matrix, graph6_atom).
std::optional<GraphFormat> parse_format_name(std::string_view name);

// Validates `value` as an n-vertex graph. Throws FormatError on malformed
// payloads or out-of-range vertices, SizeMismatchError when the payload
// disagrees with n, NotSimpleError on self-loops or asymmetric adjacency.
Graph to_graph(int n, const GraphValue& value);
GraphValue from_graph(const Graph& g, GraphFormat to);

// Lossless conversion between representations; the result is normalized.
GraphValue graph_convert(int n, GraphFormat from, GraphFormat to, const GraphValue& value);

// One-line text forms. graph6 atoms are written bare; the other formats use
// nested bracket lists, e.g. [[0,1],[1,0]] for a matrix and [[0,1],[1,2]]
// for an edge list. Vertices are 0-based.
GraphValue parse_value(GraphFormat f, std::string_view text);
std::string render_value(const GraphValue& value);

}  // namespace gsearch
