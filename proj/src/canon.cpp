#include "gsearch/canon.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "gsearch/error.hpp"

namespace gsearch {

namespace {

using Cells = std::vector<VertexMask>;

int first_vertex(VertexMask m) { return std::countr_zero(m); }
bool singleton(VertexMask m) { return (m & (m - 1)) == 0; }

// Splits cells against splitters until the queue drains. Each cell is
// divided by the number of neighbors its vertices have in the splitter;
// fragments replace the cell in place, ordered by increasing count, and are
// all queued as new splitters.
void refine(const Graph& g, Cells& cells, std::deque<VertexMask>& queue) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  std::vector<std::pair<int, int>> keyed;  // (count, vertex)
  while (!queue.empty() && cells.size() < n) {
    const VertexMask splitter = queue.front();
    queue.pop_front();
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      const VertexMask cell = cells[ci];
      if (singleton(cell)) continue;
      keyed.clear();
      for (VertexMask m = cell; m != 0; m &= m - 1) {
        const int v = first_vertex(m);
        keyed.emplace_back(std::popcount(g.row(v) & splitter), v);
      }
      const bool uniform = std::all_of(keyed.begin(), keyed.end(),
                                       [&](const auto& kv) { return kv.first == keyed.front().first; });
      if (uniform) continue;
      std::sort(keyed.begin(), keyed.end());
      Cells fragments;
      VertexMask current = 0;
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i > 0 && keyed[i].first != keyed[i - 1].first) {
          fragments.push_back(current);
          current = 0;
        }
        current |= VertexMask{1} << keyed[i].second;
      }
      fragments.push_back(current);

      if (auto it = std::find(queue.begin(), queue.end(), cell); it != queue.end()) queue.erase(it);
      for (VertexMask f : fragments) queue.push_back(f);
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci), fragments.begin(), fragments.end());
      ci += fragments.size() - 1;
    }
  }
}

Cells refine_all(const Graph& g, Cells cells) {
  std::deque<VertexMask> queue(cells.begin(), cells.end());
  refine(g, cells, queue);
  return cells;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  // Keeps the smaller vertex as the root.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }
  void absorb(const std::vector<int>& aut) {
    for (int v = 0; v < static_cast<int>(aut.size()); ++v) unite(v, aut[v]);
  }

 private:
  std::vector<int> parent_;
};

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run(Cells root) {
    std::vector<int> prefix;
    descend(std::move(root), prefix);
  }

  const std::vector<int>& best_positions() const { return best_pos_; }
  const Graph& best_leaf() const { return best_leaf_; }
  const std::vector<std::vector<int>>& automorphisms() const { return automorphisms_; }

 private:
  void descend(Cells cells, std::vector<int>& prefix) {
    if (static_cast<int>(cells.size()) == n_) {
      leaf(cells);
      return;
    }
    // First smallest non-singleton cell.
    std::size_t target = cells.size();
    int target_size = n_ + 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const int size = std::popcount(cells[i]);
      if (size > 1 && size < target_size) {
        target = i;
        target_size = size;
      }
    }
    const VertexMask target_cell = cells[target];

    // Orbits of the discovered automorphisms that fix the prefix pointwise;
    // children in the orbit of an explored child have identical subtrees.
    UnionFind stabilizer_orbits(n_);
    std::size_t absorbed = 0;
    std::vector<int> explored;

    for (VertexMask m = target_cell; m != 0; m &= m - 1) {
      const int w = first_vertex(m);
      for (; absorbed < automorphisms_.size(); ++absorbed) {
        const auto& aut = automorphisms_[absorbed];
        if (std::all_of(prefix.begin(), prefix.end(), [&](int v) { return aut[v] == v; })) {
          stabilizer_orbits.absorb(aut);
        }
      }
      const bool redundant = std::any_of(explored.begin(), explored.end(), [&](int e) {
        return stabilizer_orbits.find(e) == stabilizer_orbits.find(w);
      });
      if (redundant) continue;

      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
      const VertexMask single = VertexMask{1} << w;
      child.push_back(single);
      child.push_back(target_cell & ~single);
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
      std::deque<VertexMask> queue{single};
      refine(g_, child, queue);

      prefix.push_back(w);
      descend(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(w);
    }
  }

  void leaf(const Cells& cells) {
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[first_vertex(cells[i])] = i;
    Graph h = apply_permutation(g_, Permutation(pos));
    if (!have_leaf_) {
      have_leaf_ = true;
      first_leaf_ = best_leaf_ = h;
      first_pos_ = best_pos_ = pos;
      return;
    }
    if (h == first_leaf_) {
      record_automorphism(first_pos_, pos);
    } else if (h == best_leaf_) {
      record_automorphism(best_pos_, pos);
    } else if (h < best_leaf_) {
      best_leaf_ = std::move(h);
      best_pos_ = std::move(pos);
    }
  }

  // Both labelings give the same graph, so v -> earlier^-1(later(v)) is an
  // automorphism.
  void record_automorphism(const std::vector<int>& earlier, const std::vector<int>& later) {
    std::vector<int> inv(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) inv[earlier[v]] = v;
    std::vector<int> aut(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      aut[v] = inv[later[v]];
      identity = identity && aut[v] == v;
    }
    if (!identity) automorphisms_.push_back(std::move(aut));
  }

  const Graph& g_;
  int n_;
  bool have_leaf_ = false;
  Graph first_leaf_;
  std::vector<int> first_pos_;
  Graph best_leaf_;
  std::vector<int> best_pos_;
  std::vector<std::vector<int>> automorphisms_;
};

Cells initial_cells(const Graph& g, const CanonOptions& opts) {
  const int n = g.order();
  if (opts.initial_coloring) {
    if (opts.initial_coloring->vertex_count() != n) {
      throw SizeMismatchError("coloring covers " + std::to_string(opts.initial_coloring->vertex_count()) +
                              " vertices, graph has " + std::to_string(n));
    }
    return opts.initial_coloring->masks();
  }
  if (n == 0) return {};
  return {low_mask(n)};
}

}  // namespace

OrderedPartition refine_equitable(const Graph& g, const OrderedPartition& p) {
  if (p.vertex_count() != g.order()) {
    throw SizeMismatchError("partition covers " + std::to_string(p.vertex_count()) + " vertices, graph has " +
                            std::to_string(g.order()));
  }
  const Cells cells = refine_all(g, p.masks());
  return OrderedPartition::from_masks(g.order(), cells);
}

CanonicalResult densenauty(const Graph& g, const CanonOptions& opts) {
  const int n = g.order();
  Cells root = refine_all(g, initial_cells(g, opts));
  CanonSearch search(g);
  search.run(root);

  CanonicalResult result;
  result.partition = OrderedPartition::from_masks(n, root);
  result.permutation = Permutation(search.best_positions());
  result.labeling = result.permutation.inverse();
  result.canonic = search.best_leaf();
  UnionFind orbits(n);
  for (const auto& aut : search.automorphisms()) orbits.absorb(aut);
  result.orbits.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) result.orbits[v] = orbits.find(v);
  return result;
}

Graph canonical_form(const Graph& g) { return densenauty(g).canonic; }

Graph canonical_form(int n, const Graph& g) {
  if (g.order() != n) {
    throw SizeMismatchError("graph has " + std::to_string(g.order()) + " vertices, expected " + std::to_string(n));
  }
  return canonical_form(g);
}

std::optional<IsomorphismWitness> isomorphic(int n, const Graph& g1, const Graph& g2, const CanonOptions& opts) {
  if (g1.order() != n || g2.order() != n) {
    throw SizeMismatchError("isomorphism test on " + std::to_string(n) + " vertices given graphs with " +
                            std::to_string(g1.order()) + " and " + std::to_string(g2.order()) + " vertices");
  }
  CanonicalResult c1 = densenauty(g1, opts);
  CanonicalResult c2 = densenauty(g2, opts);
  if (c1.canonic != c2.canonic) return std::nullopt;
  // g2 = c2.permutation^-1 (canonic) = (c2.permutation^-1 ∘ c1.permutation)(g1).
  return IsomorphismWitness{compose(c2.labeling, c1.permutation), std::move(c1.canonic)};
}

CanonicGraph canonic_graph(int n, const GraphValue& graph, GraphFormat out_format) {
  CanonicalResult r = densenauty(to_graph(n, graph));
  return CanonicGraph{std::move(r.permutation), from_graph(r.canonic, out_format)};
}

}  // namespace gsearch
