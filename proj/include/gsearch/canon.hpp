#pragma once

#include <optional>
#include <vector>

#include "gsearch/convert.hpp"
#include "gsearch/graph.hpp"

namespace gsearch {

struct CanonOptions {
  // Vertex coloring; relabelings must map each color class onto the
  // positions the class occupies in the canonical order. Cell order matters:
  // two colorings are compatible when their cell sizes agree in order.
  std::optional<OrderedPartition> initial_coloring;
};

struct CanonicalResult {
  // labeling[i] is the input vertex placed at canonical position i.
  Permutation labeling;
  // Equitable refinement of the initial partition at the root of the
  // search. Implementation-defined cell order, but stable for a given input.
  OrderedPartition partition;
  // permutation[v] is v's canonical position; the inverse of labeling.
  Permutation permutation;
  // orbits[v] is the least vertex in v's orbit under the automorphisms
  // found during the search.
  std::vector<int> orbits;
  Graph canonic;
};

// Coarsest equitable partition refining `p`: every two vertices in a cell
// have the same number of neighbors in each cell. Cell order is a function
// of (g, p) that commutes with relabeling.
OrderedPartition refine_equitable(const Graph& g, const OrderedPartition& p);

// Canonical labeling by individualization-refinement. The canonical graph
// is the leaf of the search tree with the smallest upper-triangle bit
// string (equivalently, the smallest graph6 encoding).
CanonicalResult densenauty(const Graph& g, const CanonOptions& opts = {});

Graph canonical_form(const Graph& g);
// Throws SizeMismatchError if g.order() != n.
Graph canonical_form(int n, const Graph& g);

struct IsomorphismWitness {
  // apply_permutation(g1, perm) == g2.
  Permutation perm;
  Graph canonic;
};

// Absent when the graphs are not isomorphic (or, with a coloring, not
// isomorphic by a color-preserving map).
std::optional<IsomorphismWitness> isomorphic(int n, const Graph& g1, const Graph& g2,
                                             const CanonOptions& opts = {});

// Format-level entry point: canonize a graph given in any representation and
// return the permutation together with the canonical graph in `out_format`.
struct CanonicGraph {
  Permutation perm;
  GraphValue canonic;
};
CanonicGraph canonic_graph(int n, const GraphValue& graph, GraphFormat out_format);

}  // namespace gsearch
