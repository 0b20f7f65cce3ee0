// Serial reference vs OpenMP extend_and_reduce on one Ramsey(3,5) level and
// on an unfiltered level of all graphs.

#include <benchmark/benchmark.h>

#include "gsearch/enumerate.hpp"
#include "gsearch/ramsey.hpp"

namespace {

using gsearch::Graph;

const std::vector<Graph>& ramsey_parents() {
  static const std::vector<Graph> level = gsearch::gen_ramsey_gt({3, 5, 9});
  return level;
}

const std::vector<Graph>& all_parents() {
  static const std::vector<Graph> level = gsearch::all_nonisomorphic(6);
  return level;
}

const gsearch::GraphPredicate kRamsey10 = [](const Graph& g) { return gsearch::is_ramsey({3, 5, 10}, g); };
const gsearch::GraphPredicate kAlways = [](const Graph&) { return true; };

void BM_ramsey_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gsearch::extend_and_reduce_serial(ramsey_parents(), kRamsey10));
}

void BM_ramsey_parallel(benchmark::State& state) {
  gsearch::ExtendOptions opts;
  opts.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gsearch::extend_and_reduce(ramsey_parents(), kRamsey10, opts));
}

void BM_all_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gsearch::extend_and_reduce_serial(all_parents(), kAlways));
}

void BM_all_parallel(benchmark::State& state) {
  gsearch::ExtendOptions opts;
  opts.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gsearch::extend_and_reduce(all_parents(), kAlways, opts));
}

}  // namespace

BENCHMARK(BM_ramsey_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ramsey_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_all_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_all_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
