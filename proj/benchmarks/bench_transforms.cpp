#include <benchmark/benchmark.h>

#include "cumulants/distributions.hpp"
#include "cumulants/oracles.hpp"
#include "cumulants/partitions.hpp"
#include "cumulants/transforms.hpp"

namespace {

using namespace cumulants;

// m_k = 1/k, the rational input used by `cumulants bench`.
MomentSequence harmonic(unsigned order) {
  std::vector<Scalar> m;
  for (unsigned k = 1; k <= order; ++k) m.emplace_back(Rational(BigInt(1), BigInt(k)));
  return MomentSequence(std::move(m));
}

// Single coefficient r_n: one partition sum over p(n) terms, as timed by
// `cumulants bench`.
void BM_FreeCoefficient(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  const auto m = harmonic(order);
  const WeightSpec w = weights::free_from_moments();
  for (auto _ : state) benchmark::DoNotOptimize(partition_transform(order, w, m.values()));
  state.counters["terms"] = static_cast<double>(partition_count(order).get_ui());
}
BENCHMARK(BM_FreeCoefficient)->DenseRange(15, 27, 3)->Unit(benchmark::kMillisecond);

// Whole sequence r_1..r_n.
void BM_FreeFromMoments(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  const auto m = harmonic(order);
  for (auto _ : state) benchmark::DoNotOptimize(free_cumulants_from_moments(m));
  state.counters["terms"] = static_cast<double>(partition_count(order).get_ui());
}
BENCHMARK(BM_FreeFromMoments)->DenseRange(15, 27, 3)->Unit(benchmark::kMillisecond);

void BM_FreeFromMomentsParallel(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  const auto m = harmonic(order);
  const Transformer t(ConversionWeights::standard(), ExecutionOptions{.parallel = true});
  for (auto _ : state) benchmark::DoNotOptimize(t.cumulants_from_moments(CumulantKind::free, m));
}
BENCHMARK(BM_FreeFromMomentsParallel)->DenseRange(15, 27, 3)->Unit(benchmark::kMillisecond);

void BM_ClassicalFromMoments(benchmark::State& state) {
  const auto m = harmonic(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classical_cumulants_from_moments(m));
}
BENCHMARK(BM_ClassicalFromMoments)->DenseRange(15, 27, 3)->Unit(benchmark::kMillisecond);

void BM_MarchenkoPasturSymbolic(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  const Scalar lambda = Scalar::symbol("lambda");
  for (auto _ : state) benchmark::DoNotOptimize(marchenko_pastur_moments(lambda, order));
}
BENCHMARK(BM_MarchenkoPasturSymbolic)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

// Series oracle for comparison with the partition sum.
void BM_FreeSeriesOracle(benchmark::State& state) {
  const auto m = harmonic(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::series_free_cumulants(m.values()));
}
BENCHMARK(BM_FreeSeriesOracle)->DenseRange(15, 27, 3)->Unit(benchmark::kMillisecond);

void BM_EnumeratePartitions(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(order));
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(15, 27, 3);

}  // namespace

BENCHMARK_MAIN();
