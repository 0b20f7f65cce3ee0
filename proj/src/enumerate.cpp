#include "gsearch/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <exception>

#include <omp.h>

#include "gsearch/canon.hpp"
#include "gsearch/error.hpp"
#include "gsearch/graph6.hpp"

namespace gsearch {

namespace {

using Clock = std::chrono::steady_clock;

void check_uniform_order(std::span<const Graph> graphs) {
  for (const auto& g : graphs) {
    if (g.order() != graphs.front().order()) {
      throw SizeMismatchError("graphs with " + std::to_string(graphs.front().order()) + " and " +
                              std::to_string(g.order()) + " vertices in one set");
    }
  }
}

// Work done for one parent graph; shared by the serial and parallel paths.
void extend_one(const Graph& parent, const GraphPredicate& keep, const ExtendOptions& opts,
                std::vector<Graph>& out, ExtendStats& stats) {
  for_each_extension(parent, [&](const Graph& h) {
    ++stats.extensions;
    if (!keep(h)) return;
    ++stats.kept;
    if (opts.canonize) {
      const auto start = Clock::now();
      out.push_back(canonical_form(h));
      stats.canon_seconds += std::chrono::duration<double>(Clock::now() - start).count();
    } else {
      out.push_back(h);
    }
  });
}

void check_canonical(const Graph& g) {
  if (canonical_form(g) != g) {
    throw Error("extend_and_reduce input " + encode_graph6(g) + " is not in canonical form");
  }
}

void accumulate(ExtendStats* total, const ExtendStats& part) {
  if (!total) return;
  total->extensions += part.extensions;
  total->kept += part.kept;
  total->canon_seconds += part.canon_seconds;
}

int thread_count(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

}  // namespace

void sort_unique(std::vector<Graph>& graphs) {
  std::sort(graphs.begin(), graphs.end());
  graphs.erase(std::unique(graphs.begin(), graphs.end()), graphs.end());
}

std::vector<Graph> extend_and_reduce_serial(std::span<const Graph> graphs, const GraphPredicate& keep,
                                            const ExtendOptions& opts, ExtendStats* stats) {
  if (graphs.empty()) return {};
  check_uniform_order(graphs);
  if (opts.canonize && opts.strict) {
    for (const auto& g : graphs) check_canonical(g);
  }
  std::vector<Graph> out;
  ExtendStats local;
  for (const auto& g : graphs) extend_one(g, keep, opts, out, local);
  sort_unique(out);
  accumulate(stats, local);
  return out;
}

std::vector<Graph> extend_and_reduce(std::span<const Graph> graphs, const GraphPredicate& keep,
                                     const ExtendOptions& opts, ExtendStats* stats) {
  if (graphs.empty()) return {};
  check_uniform_order(graphs);
  const auto count = static_cast<std::ptrdiff_t>(graphs.size());
  std::vector<Graph> merged;
  ExtendStats total;
  std::exception_ptr failure;

#pragma omp parallel num_threads(thread_count(opts.jobs))
  {
    std::vector<Graph> local;
    ExtendStats local_stats;
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        if (opts.canonize && opts.strict) check_canonical(graphs[i]);
        extend_one(graphs[i], keep, opts, local, local_stats);
      } catch (...) {
#pragma omp critical(gsearch_extend_failure)
        if (!failure) failure = std::current_exception();
      }
      // Keep per-thread buffers bounded by the number of classes.
      if (local.size() > 4096) sort_unique(local);
    }
    sort_unique(local);
#pragma omp critical(gsearch_extend_merge)
    {
      merged.insert(merged.end(), local.begin(), local.end());
      accumulate(&total, local_stats);
    }
  }
  if (failure) std::rethrow_exception(failure);
  sort_unique(merged);
  accumulate(stats, total);
  return merged;
}

std::vector<Graph> all_nonisomorphic(int n, int jobs) {
  if (n < 0) throw SizeMismatchError("negative vertex count");
  if (n > Graph::kMaxVertices) throw CapacityError("vertex count beyond the cap");
  std::vector<Graph> level{Graph(0)};
  ExtendOptions opts;
  opts.jobs = jobs;
  opts.strict = false;  // every level is produced canonical by construction
  const GraphPredicate always = [](const Graph&) { return true; };
  for (int i = 0; i < n; ++i) level = extend_and_reduce(level, always, opts);
  return level;
}

std::vector<Graph> dedup_canonical(std::span<const Graph> graphs, int jobs) {
  if (graphs.empty()) return {};
  check_uniform_order(graphs);
  std::vector<Graph> out(graphs.size());
  const auto count = static_cast<std::ptrdiff_t>(graphs.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(jobs))
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = canonical_form(graphs[i]);
  sort_unique(out);
  return out;
}

}  // namespace gsearch
