#include <benchmark/benchmark.h>

#include "rootclust/counting.hpp"

using namespace rootclust;

namespace {

PolyPtr family(int which, long size) {
  switch (which) {
    case 0:
      return family_mignotte(14, size);
    case 1:
      return family_mandelbrot(size);
    default:
      return family_bernoulli(size);
  }
}

// A root-free disc of radius 1/64 near the unit circle, typical of C0 calls.
Disc exclusion_disc() { return Disc{{Dyadic(3).mul_2exp(-2), Dyadic(3).mul_2exp(-2)}, Dyadic(1).mul_2exp(-6)}; }

void BM_TstarExclusion(benchmark::State& state) {
  PolyPtr p = family(static_cast<int>(state.range(0)), state.range(1));
  const Disc d = exclusion_disc();
  for (auto _ : state) benchmark::DoNotOptimize(tstar_exclusion(*p, d));
  state.SetLabel(p->provenance().describe());
}
BENCHMARK(BM_TstarExclusion)->Args({0, 64})->Args({0, 128})->Args({1, 6})->Args({1, 7})->Args({2, 64})
    ->Unit(benchmark::kMicrosecond);

void BM_PstarApprox(benchmark::State& state) {
  PolyPtr p = family(static_cast<int>(state.range(0)), state.range(1));
  const Disc d = exclusion_disc();
  for (auto _ : state) benchmark::DoNotOptimize(pstar_approx(*p, d, 2).value);
  state.SetLabel(p->provenance().describe());
}
BENCHMARK(BM_PstarApprox)->Args({0, 64})->Args({0, 128})->Args({1, 6})->Args({1, 7})->Args({2, 64})
    ->Unit(benchmark::kMicrosecond);

void BM_PstarCount(benchmark::State& state) {
  PolyPtr p = family_mignotte(14, state.range(0));
  const Disc d{{Dyadic(1).mul_2exp(-14), Dyadic(0)}, Dyadic(1).mul_2exp(-17)};
  for (auto _ : state) benchmark::DoNotOptimize(pstar_count(*p, d, 2).value);
}
BENCHMARK(BM_PstarCount)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_GraeffeIterate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const prec_t prec = state.range(1);
  std::vector<ComplexInterval> coeffs;
  for (std::size_t i = 0; i < n; ++i) {
    coeffs.emplace_back(mpq_class(static_cast<long>(i) + 1, 3), mpq_class(1, static_cast<long>(i) + 2), prec);
  }
  for (auto _ : state) benchmark::DoNotOptimize(graeffe_iterate(coeffs, prec));
}
BENCHMARK(BM_GraeffeIterate)->Args({16, 53})->Args({64, 53})->Args({64, 212})->Args({256, 53})
    ->Unit(benchmark::kMicrosecond);

void BM_ShiftedCoefficients(benchmark::State& state) {
  PolyPtr p = family(static_cast<int>(state.range(0)), state.range(1));
  const Disc d = exclusion_disc();
  for (auto _ : state) benchmark::DoNotOptimize(shifted_coefficients(*p, d, 53, 42));
  state.SetLabel(p->provenance().describe());
}
BENCHMARK(BM_ShiftedCoefficients)->Args({0, 128})->Args({1, 7})->Args({2, 128})->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
