#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gsearch/graph.hpp"

namespace gsearch {

using GraphPredicate = std::function<bool(const Graph&)>;

struct ExtendOptions {
  // Replace each kept extension by its canonical form. When false the
  // labeled extensions themselves are collected (still sorted and deduped).
  bool canonize = true;
  // Reject input graphs that are not their own canonical form.
  bool strict = true;
  // OpenMP threads; 0 uses the runtime default.
  int jobs = 0;
};

struct ExtendStats {
  std::size_t extensions = 0;
  std::size_t kept = 0;
  // Summed over threads.
  double canon_seconds = 0.0;
};

// { canonical_form(h) : g in graphs, h in extensions(g), keep(h) }, sorted by
// graph6 order with duplicates removed. Parents are processed in parallel;
// the merge is deterministic, so the output does not depend on `jobs`.
// `keep` must be safe to call concurrently.
std::vector<Graph> extend_and_reduce(std::span<const Graph> graphs, const GraphPredicate& keep,
                                     const ExtendOptions& opts = {}, ExtendStats* stats = nullptr);

// Single-threaded reference for extend_and_reduce.
std::vector<Graph> extend_and_reduce_serial(std::span<const Graph> graphs, const GraphPredicate& keep,
                                            const ExtendOptions& opts = {}, ExtendStats* stats = nullptr);

// One canonical representative per isomorphism class on n vertices, in
// graph6 order. Built by iterating extend_and_reduce from the empty graph;
// intended for n <= 9 or so.
std::vector<Graph> all_nonisomorphic(int n, int jobs = 0);

// Canonical representatives of the classes present in `graphs`, in graph6
// order. Throws SizeMismatchError on mixed vertex counts.
std::vector<Graph> dedup_canonical(std::span<const Graph> graphs, int jobs = 0);

// Sorts by graph6 order and removes duplicates.
void sort_unique(std::vector<Graph>& graphs);

}  // namespace gsearch
