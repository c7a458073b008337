#include <benchmark/benchmark.h>

#include "sl2voa/classify.hpp"
#include "sl2voa/session.hpp"
#include "sl2voa/verify.hpp"

using namespace sl2voa;

static void BM_GramRadical(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) {
    Session s(k);
    benchmark::DoNotOptimize(s.quotient(0).radical_basis(d));
  }
}
BENCHMARK(BM_GramRadical)->Args({3, 4})->Args({4, 5})->Unit(benchmark::kMillisecond);

static void BM_OmegaOnTop(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Session s(k);
    const FockVector& omega = s.state(StateName::omega).value;
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= i; ++j) benchmark::DoNotOptimize(s.modes(i).composite_mode(omega, 1, s.space(i).top(j)));
  }
}
BENCHMARK(BM_OmegaOnTop)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_TwistedW3OnEta(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Session s(k);
    const FockVector& w3 = s.state(StateName::w3).value;
    for (int i = 0; i <= k; ++i)
      benchmark::DoNotOptimize(
          s.twist(i).twisted_mode(w3, TwistedModeIndex(make_scalar(3, 2)), s.twist(i).eta()));
  }
}
BENCHMARK(BM_TwistedW3OnEta)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_Classify(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify(k));
}
BENCHMARK(BM_Classify)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_VerifyAll(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(k));
}
BENCHMARK(BM_VerifyAll)->Arg(3)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_MAIN();
