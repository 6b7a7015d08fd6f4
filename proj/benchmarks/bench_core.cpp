#include <benchmark/benchmark.h>

#include "swanson/swanson.hpp"

using namespace swanson;

namespace {

void BM_TruncatedSpectrum(benchmark::State& state) {
  const ModelConfig cfg(0.5, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(truncated_spectrum(cfg));
}
BENCHMARK(BM_TruncatedSpectrum)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_ResolventSigmaMin(benchmark::State& state) {
  const ModelConfig cfg(0.5, state.range(0));
  const Complex z(6.0, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(resolvent_sigma_min(cfg, z));
}
BENCHMARK(BM_ResolventSigmaMin)->Arg(100)->Arg(300)->Unit(benchmark::kMicrosecond);

// One grid row of the default region at resolution 200 costs 200 nodes; this
// measures a 20 x 20 patch with one worker.
void BM_PseudospectrumPatch(benchmark::State& state) {
  const ModelConfig cfg(0.5, 300);
  for (auto _ : state) benchmark::DoNotOptimize(pseudospectrum(cfg, Region{}, 20, 1));
}
BENCHMARK(BM_PseudospectrumPatch)->Unit(benchmark::kMillisecond);

void BM_SupportFunction(benchmark::State& state) {
  const ModelConfig cfg(0.5, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(support_function(cfg, 0.3));
}
BENCHMARK(BM_SupportFunction)->Arg(400)->Arg(800)->Unit(benchmark::kMicrosecond);

void BM_SupportFunctionDense(benchmark::State& state) {
  const ModelConfig cfg(0.5, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(support_function_dense(cfg, 0.3));
}
BENCHMARK(BM_SupportFunctionDense)->Arg(400)->Unit(benchmark::kMillisecond);

// Rules are built once per node count and cached; this is the lookup plus scaling.
void BM_GaussHermiteRule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_hermite_rule(n));
}
BENCHMARK(BM_GaussHermiteRule)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_GramMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(0.5, n));
}
BENCHMARK(BM_GramMatrix)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_Evolve(benchmark::State& state) {
  const CompressedModel m = compress(0.5, 8);
  CVector c0 = CVector::Zero(8);
  c0(0) = c0(2) = 1.0;
  const auto grid = uniform_time_grid(10.0, 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(evolve(m, c0, grid));
}
BENCHMARK(BM_Evolve)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
