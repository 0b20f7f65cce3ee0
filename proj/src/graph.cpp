#include "gsearch/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "gsearch/error.hpp"

namespace gsearch {

namespace {

void check_order(int n) {
  if (n < 0) throw SizeMismatchError("negative vertex count " + std::to_string(n));
  if (n > Graph::kMaxVertices) {
    throw CapacityError("graph has " + std::to_string(n) + " vertices; the cap is " +
                        std::to_string(Graph::kMaxVertices));
  }
}

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw FormatError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  check_order(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_matrix(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(rows[u].size()) != n) {
      throw SizeMismatchError("adjacency matrix row " + std::to_string(u) + " has " +
                              std::to_string(rows[u].size()) + " entries, expected " +
                              std::to_string(n));
    }
    for (int v = 0; v < n; ++v) {
      const int x = rows[u][v];
      if (x != 0 && x != 1) throw FormatError("adjacency matrix entries must be 0 or 1");
      if (x == 1) {
        if (u == v) throw NotSimpleError("self-loop at vertex " + std::to_string(u));
        g.rows_[u] |= VertexMask{1} << v;
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v) != g.has_edge(v, u)) {
        throw NotSimpleError("adjacency matrix is not symmetric at (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
      }
    }
  }
  return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw NotSimpleError("self-loop at vertex " + std::to_string(u));
    g.set_edge(u, v, true);
  }
  return g;
}

VertexMask Graph::vertex_set() const noexcept { return low_mask(n_); }

int Graph::degree(int v) const noexcept { return std::popcount(rows_[v]); }

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (VertexMask r : rows_) twice += std::popcount(r);
  return twice / 2;
}

void Graph::set_edge(int u, int v, bool present) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) {
    if (present) throw NotSimpleError("self-loop at vertex " + std::to_string(u));
    return;
  }
  const VertexMask bu = VertexMask{1} << u;
  const VertexMask bv = VertexMask{1} << v;
  if (present) {
    rows_[u] |= bv;
    rows_[v] |= bu;
  } else {
    rows_[u] &= ~bv;
    rows_[v] &= ~bu;
  }
}

std::vector<std::vector<int>> Graph::to_matrix() const {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n_), std::vector<int>(n_, 0));
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v) m[u][v] = has_edge(u, v) ? 1 : 0;
  return m;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(VertexMask keep) const {
  keep &= vertex_set();
  std::vector<int> old_ids;
  for (VertexMask m = keep; m != 0; m &= m - 1) old_ids.push_back(std::countr_zero(m));
  Graph h(static_cast<int>(old_ids.size()));
  for (int i = 0; i < h.n_; ++i) {
    for (int j = i + 1; j < h.n_; ++j) {
      if (has_edge(old_ids[i], old_ids[j])) h.set_edge(i, j, true);
    }
  }
  return h;
}

std::strong_ordering operator<=>(const Graph& a, const Graph& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  // Column j holds the pairs (0,j),(1,j),...,(j-1,j); the lowest differing
  // row index is the most significant differing bit.
  for (int j = 1; j < a.n_; ++j) {
    const VertexMask diff = (a.rows_[j] ^ b.rows_[j]) & low_mask(j);
    if (diff != 0) {
      const int i = std::countr_zero(diff);
      return ((a.rows_[j] >> i) & 1U) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
  const int n = static_cast<int>(map_.size());
  std::vector<bool> seen(map_.size(), false);
  for (int x : map_) {
    if (x < 0 || x >= n || seen[x]) throw FormatError("not a permutation of [0," + std::to_string(n) + ")");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < size(); ++i)
    if (map_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (int i = 0; i < size(); ++i) inv[map_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw SizeMismatchError("composing permutations of different lengths");
  std::vector<int> m(static_cast<std::size_t>(inner.size()));
  for (int i = 0; i < inner.size(); ++i) m[i] = outer[inner[i]];
  return Permutation(std::move(m));
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) {
    throw SizeMismatchError("permutation of length " + std::to_string(p.size()) +
                            " applied to a graph on " + std::to_string(g.order()) + " vertices");
  }
  Graph r(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (VertexMask m = g.row(u) & ~low_mask(u + 1); m != 0; m &= m - 1) {
      r.set_edge(p[u], p[std::countr_zero(m)], true);
    }
  }
  return r;
}

OrderedPartition::OrderedPartition(int n, std::vector<std::vector<int>> cells)
    : n_(n), cells_(std::move(cells)) {
  check_order(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int covered = 0;
  for (auto& cell : cells_) {
    if (cell.empty()) throw FormatError("partition contains an empty cell");
    for (int v : cell) {
      check_vertex(n, v);
      if (seen[v]) throw FormatError("vertex " + std::to_string(v) + " appears in two cells");
      seen[v] = true;
      ++covered;
    }
    std::sort(cell.begin(), cell.end());
  }
  if (covered != n) throw FormatError("partition does not cover every vertex");
}

OrderedPartition OrderedPartition::unit(int n) {
  if (n == 0) return OrderedPartition(0, {});
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return OrderedPartition(n, {std::move(all)});
}

OrderedPartition OrderedPartition::from_masks(int n, std::span<const VertexMask> cells) {
  std::vector<std::vector<int>> out;
  out.reserve(cells.size());
  for (VertexMask c : cells) {
    std::vector<int> cell;
    for (VertexMask m = c; m != 0; m &= m - 1) cell.push_back(std::countr_zero(m));
    out.push_back(std::move(cell));
  }
  return OrderedPartition(n, std::move(out));
}

std::vector<VertexMask> OrderedPartition::masks() const {
  std::vector<VertexMask> out;
  out.reserve(cells_.size());
  for (const auto& cell : cells_) {
    VertexMask m = 0;
    for (int v : cell) m |= VertexMask{1} << v;
    out.push_back(m);
  }
  return out;
}

void for_each_extension(const Graph& g, const std::function<void(const Graph&)>& visit) {
  const int n = g.order();
  if (n >= Graph::kMaxVertices) {
    throw CapacityError("cannot extend a graph already at the " + std::to_string(Graph::kMaxVertices) +
                        "-vertex cap");
  }
  Graph h(n + 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v)) h.set_edge(u, v, true);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t nbrs = 0; nbrs < count; ++nbrs) {
    for (int u = 0; u < n; ++u) h.set_edge(u, n, (nbrs >> u) & 1U);
    visit(h);
  }
}

std::vector<Graph> extensions(const Graph& g) {
  std::vector<Graph> out;
  if (g.order() < 63) out.reserve(std::size_t{1} << g.order());
  for_each_extension(g, [&](const Graph& h) { out.push_back(h); });
  return out;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  for_each_k_subset(n, k, [&](VertexMask m) {
    std::vector<int> s;
    for (; m != 0; m &= m - 1) s.push_back(std::countr_zero(m));
    out.push_back(std::move(s));
    return true;
  });
  return out;
}

std::string to_string(const Permutation& p, int base) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i] + base;
  }
  os << ']';
  return os.str();
}

}  // namespace gsearch
