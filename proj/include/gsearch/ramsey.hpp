#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gsearch/graph.hpp"
#include "gsearch/sat.hpp"

namespace gsearch {

// A Ramsey (s,t;n) graph has n vertices, no independent set of size s and no
// clique of size t. (Edges are color 1, non-edges color 0; an s-subset may
// not be all color 0 and a t-subset may not be all color 1.)
struct RamseyInstance {
  int s = 3;
  int t = 3;
  int n = 0;

  // Throws Error unless s >= 1, t >= 1 and 0 <= n <= the vertex cap.
  void validate() const;
};

// Checks every s-subset and t-subset of the vertices. Throws
// SizeMismatchError if g.order() != inst.n.
bool is_ramsey(const RamseyInstance& inst, const Graph& g);

struct LevelStats {
  int n = 0;
  std::size_t count = 0;
  double seconds = 0.0;
  double canon_seconds = 0.0;
  // Constrain-and-generate only: projected models enumerated by the solver.
  std::size_t models = 0;
};

struct RamseyResult {
  std::vector<Graph> graphs;        // sorted by graph6 order
  std::vector<LevelStats> levels;   // one per generated vertex count
};

struct GenerateOptions {
  // Disabling either reproduces the unreduced / unfiltered variants of the
  // generate-and-test loop: without canonization every labeled graph is
  // kept, without the filter every extension is kept.
  bool canonize = true;
  bool filter = true;
  int jobs = 0;
};

// Generate, test and reduce: starting from the empty graph, add one vertex
// at a time, keep extensions that are Ramsey graphs for the current size,
// and reduce them to canonical forms.
RamseyResult run_ramsey_gt(const RamseyInstance& inst, const GenerateOptions& opts = {});
std::vector<Graph> gen_ramsey_gt(const RamseyInstance& inst);

// Variable ids 1..C(n,2) for the pairs u < v in row-major order
// (0,1),(0,2),...,(0,n-1),(1,2),...
class EdgeVarMap {
 public:
  explicit EdgeVarMap(int n);

  int vertex_count() const noexcept { return n_; }
  int num_edge_vars() const noexcept { return n_ * (n_ - 1) / 2; }
  // Requires u != v; argument order does not matter.
  int var(int u, int v) const;
  std::pair<int, int> pair_of(int var) const;
  std::vector<int> projection() const;

 private:
  int n_;
};

struct RamseyEncoding {
  EdgeVarMap edges;
  sat::CnfFormula cnf;
};

// Symmetry-broken CNF: for every pair of rows i < j, row i with columns i
// and j removed is lexicographically no greater than row j with the same
// columns removed; every s-subset has an edge; every t-subset has a
// non-edge. Auxiliary variables for the lex chains follow the edge
// variables. Requires n >= 1.
RamseyEncoding encode_ramsey(const RamseyInstance& inst);

Graph decode_model(const EdgeVarMap& edges, const sat::Model& model);

// Constrain, generate and reduce: enumerate all models of the encoding
// projected on the edge variables, decode, canonize, sort and deduplicate.
RamseyResult run_ramsey_cg(const RamseyInstance& inst);
std::vector<Graph> gen_ramsey_cg(const RamseyInstance& inst);

}  // namespace gsearch
