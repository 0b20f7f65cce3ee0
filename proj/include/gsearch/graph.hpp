#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

// Vertex cap; a bit-row is one 64-bit word, so the cap can be lowered but
// not raised.
#ifndef GSEARCH_MAX_VERTICES
#define GSEARCH_MAX_VERTICES 64
#endif
static_assert(GSEARCH_MAX_VERTICES >= 1 && GSEARCH_MAX_VERTICES <= 64, "GSEARCH_MAX_VERTICES must be in 1..64");

namespace gsearch {

using VertexMask = std::uint64_t;

// Simple undirected graph on vertices [0, n), stored as one bit-row per
// vertex. Bit v of row u is set iff {u, v} is an edge. The diagonal is
// always clear and rows are kept symmetric.
class Graph {
 public:
  static constexpr int kMaxVertices = GSEARCH_MAX_VERTICES;

  Graph() = default;
  explicit Graph(int n);

  // Throws NotSimpleError on self-loops or asymmetric input and FormatError
  // on entries other than 0/1.
  static Graph from_matrix(const std::vector<std::vector<int>>& rows);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return n_; }
  bool has_edge(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }
  VertexMask row(int v) const noexcept { return rows_[v]; }
  VertexMask vertex_set() const noexcept;
  int degree(int v) const noexcept;
  int edge_count() const noexcept;

  void set_edge(int u, int v, bool present);

  std::vector<std::vector<int>> to_matrix() const;
  std::vector<std::pair<int, int>> edges() const;

  // Subgraph induced on the vertices of `keep`, relabeled in increasing
  // vertex order.
  Graph induced(VertexMask keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

  // Orders by vertex count, then numerically by the upper-triangle bit
  // string read in column order (0,1),(0,2),(1,2),(0,3),... with the first
  // pair most significant. This coincides with lexicographic order of the
  // graph6 encodings.
  friend std::strong_ordering operator<=>(const Graph& a, const Graph& b) noexcept;

 private:
  int n_ = 0;
  std::vector<VertexMask> rows_;
};

inline VertexMask low_mask(int n) noexcept {
  return n >= 64 ? ~VertexMask{0} : ((VertexMask{1} << n) - 1);
}

// Bijection on [0, n) in one-line notation: p[v] is the image of v.
class Permutation {
 public:
  Permutation() = default;
  // Throws FormatError unless `map` is a bijection on [0, map.size()).
  explicit Permutation(std::vector<int> map);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(map_.size()); }
  int operator[](int v) const noexcept { return map_[v]; }
  const std::vector<int>& map() const noexcept { return map_; }
  bool is_identity() const noexcept;

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

// (outer ∘ inner)(v) = outer(inner(v)).
Permutation compose(const Permutation& outer, const Permutation& inner);

// Result r satisfies r.has_edge(p[u], p[v]) == g.has_edge(u, v).
Graph apply_permutation(const Graph& g, const Permutation& p);

// Ordered sequence of non-empty, pairwise-disjoint cells covering [0, n).
class OrderedPartition {
 public:
  OrderedPartition() = default;
  // Throws FormatError if the cells are empty, overlap, or miss a vertex.
  OrderedPartition(int n, std::vector<std::vector<int>> cells);

  static OrderedPartition unit(int n);
  static OrderedPartition from_masks(int n, std::span<const VertexMask> cells);

  int vertex_count() const noexcept { return n_; }
  const std::vector<std::vector<int>>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool is_discrete() const noexcept { return static_cast<int>(cells_.size()) == n_; }
  std::vector<VertexMask> masks() const;

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> cells_;
};

// Calls `visit` on each extension of g by one new vertex (appended as the
// last vertex, index g.order()). The new vertex's neighborhood is the bit
// pattern of a counter running from 0 to 2^n - 1. Throws CapacityError if
// g is already at the vertex cap.
void for_each_extension(const Graph& g, const std::function<void(const Graph&)>& visit);
std::vector<Graph> extensions(const Graph& g);

// All size-k subsets of [0, n) in lexicographic order; empty when k > n.
std::vector<std::vector<int>> k_subsets(int n, int k);

// Same enumeration as bit masks, visiting in the same order. Stops early and
// returns false as soon as `visit` returns false.
template <class Visit>
bool for_each_k_subset(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexMask mask = 0;
    for (int v : idx) mask |= VertexMask{1} << v;
    if (!visit(mask)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string to_string(const Permutation& p, int base = 0);

}  // namespace gsearch
