#include <benchmark/benchmark.h>

#include "laakso/casimir.hpp"
#include "laakso/graph.hpp"
#include "laakso/oracle.hpp"
#include "laakso/special.hpp"
#include "laakso/spectrum.hpp"
#include "laakso/zeta.hpp"

namespace {

using namespace laakso;

void BM_HurwitzZeta(benchmark::State& state) {
  const ComplexValue s(0.5, static_cast<double>(state.range(0)));
  benchmark::DoNotOptimize(bernoulli(240));
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_zeta(s, 0.3));
}
BENCHMARK(BM_HurwitzZeta)->Arg(1)->Arg(10)->Arg(100);

void BM_FreeSpectrum(benchmark::State& state) {
  const auto seq = make_sequence({2}, 1);
  const double cutoff = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(free_spectrum(seq, cutoff));
}
BENCHMARK(BM_FreeSpectrum)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_ZetaClosed(benchmark::State& state) {
  const auto seq = make_sequence({2, 3}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(zeta_laakso_closed(seq, ComplexValue(2.0, 5.0)));
}
BENCHMARK(BM_ZetaClosed);

void BM_ZetaFinite(benchmark::State& state) {
  const auto seq = make_sequence({3}, 1);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_finite(seq, m, ComplexValue(1.5, 2.0)));
}
BENCHMARK(BM_ZetaFinite)->Arg(1)->Arg(4)->Arg(16);

void BM_BuildGraph(benchmark::State& state) {
  const auto seq = make_sequence({2}, 1);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(seq, n));
}
BENCHMARK(BM_BuildGraph)->DenseRange(1, 5);

void BM_OracleLevelTwo(benchmark::State& state) {
  const auto seq = make_sequence({2}, 1);
  const auto graph = build_graph(seq, 2);
  const auto closed = finite_spectrum(seq, 2, 400.0);
  for (auto _ : state) benchmark::DoNotOptimize(run_oracle(graph, closed, 512, 1e-3));
}
BENCHMARK(BM_OracleLevelTwo)->Unit(benchmark::kMillisecond);

void BM_ForceSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_force(256, 1, 125));
}
BENCHMARK(BM_ForceSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
