#include <benchmark/benchmark.h>

#include "mltg/match.hpp"

namespace {

using namespace mltg;

// Directed cycle of length n with a chord from every node to the one two steps ahead.
GraphRef host_graph(int n) {
  Graph g;
  for (int k = 0; k < n; ++k) g.add_node("v" + std::to_string(k));
  for (int k = 0; k < n; ++k) {
    g.add_arrow("e" + std::to_string(k), "v" + std::to_string(k), "v" + std::to_string((k + 1) % n));
    g.add_arrow("c" + std::to_string(k), "v" + std::to_string(k), "v" + std::to_string((k + 2) % n));
  }
  return share(std::move(g));
}

GraphRef path_pattern(int length) {
  Graph g;
  for (int k = 0; k <= length; ++k) g.add_node("p" + std::to_string(k));
  for (int k = 0; k < length; ++k) g.add_arrow("a" + std::to_string(k), "p" + std::to_string(k), "p" + std::to_string(k + 1));
  return share(std::move(g));
}

void run(benchmark::State& state, Execution execution) {
  auto host = host_graph(static_cast<int>(state.range(0)));
  auto pattern = path_pattern(static_cast<int>(state.range(1)));
  std::size_t count = 0;
  for (auto _ : state) {
    auto homs = enumerate_homomorphisms(pattern, host, {}, execution);
    count = homs.size();
    benchmark::DoNotOptimize(homs);
  }
  state.counters["matches"] = static_cast<double>(count);
}

void BM_MatchSerial(benchmark::State& state) { run(state, Execution::Serial); }
void BM_MatchParallel(benchmark::State& state) { run(state, Execution::Parallel); }

BENCHMARK(BM_MatchSerial)->Args({64, 4})->Args({256, 5})->Args({512, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatchParallel)->Args({64, 4})->Args({256, 5})->Args({512, 6})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
