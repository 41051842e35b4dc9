#include <benchmark/benchmark.h>

#include "benchmark_suite.hpp"

using namespace rootclust;

namespace {

// Whole solves per configuration; counters report tree size and test calls.
void BM_Solve(benchmark::State& state, std::string family, std::map<std::string, long> params, Box roi,
              std::string algo) {
  PolyPtr p = make_family(family, params);
  const SolverConfig cfg = config_for(algo, roi, 53);
  ClusterReport r;
  for (auto _ : state) r = solve(*p, cfg);
  state.counters["clusters"] = static_cast<double>(r.clusters.size());
  state.counters["tree"] = static_cast<double>(r.stats.tree_size);
  state.counters["tstar"] = static_cast<double>(r.stats.counts.tstar_calls);
  state.counters["pstar_approx"] = static_cast<double>(r.stats.counts.pstar_approx_calls);
}

const Box kUnit4{{Dyadic(0), Dyadic(0)}, Dyadic(4)};
const Box kGlobal{{Dyadic(0), Dyadic(0)}, Dyadic(1000)};

}  // namespace

BENCHMARK_CAPTURE(BM_Solve, mig32_tstar, "mignotte", {{"a", 14}, {"d", 32}}, kUnit4, "t-star")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, mig32_real, "mignotte", {{"a", 14}, {"d", 32}}, kUnit4, "real")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, mig32_real_ps, "mignotte", {{"a", 14}, {"d", 32}}, kUnit4, "real-ps")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, man5_tstar, "mandelbrot", {{"k", 5}}, kGlobal, "t-star")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, man5_real_ps, "mandelbrot", {{"k", 5}}, kGlobal, "real-ps")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, ber32_real_ps, "bernoulli", {{"d", 32}}, kGlobal, "real-ps")
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
