#include <benchmark/benchmark.h>

#include "projsep/classify.hpp"
#include "projsep/generators.hpp"
#include "projsep/metrics.hpp"
#include "projsep/projections.hpp"

using namespace projsep;

namespace {

CovariancePair iw_pair(int p) {
  RngStream rng(1, {static_cast<std::uint64_t>(p)});
  return gen_iw_pair(p, 2.0 * p, 2.0 * p, rng);
}

SpdMatrix mixture(const CovariancePair& pair) {
  return SpdMatrix::make(pair.first.entries() + pair.second.entries());
}

void BM_EmbeddedOverlap(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto pair = iw_pair(p);
  const auto model = TwoClassGaussian::centered(pair.first, pair.second);
  const auto w = pca_projection(mixture(pair), 5);
  for (auto _ : state) benchmark::DoNotOptimize(embedded_overlap(model, w));
}
BENCHMARK(BM_EmbeddedOverlap)->Arg(20)->Arg(200)->Arg(1000);

void BM_PcaProjection(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto mix = mixture(iw_pair(p));
  for (auto _ : state) benchmark::DoNotOptimize(pca_projection(mix, 5));
}
BENCHMARK(BM_PcaProjection)->Arg(20)->Arg(200)->Arg(1000);

void BM_RandomProjection(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  RngStream rng(2, {});
  for (auto _ : state) benchmark::DoNotOptimize(random_projection(p, 5, rng));
}
BENCHMARK(BM_RandomProjection)->Arg(200)->Arg(1000);

void BM_SparseRandomProjection(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  RngStream rng(3, {});
  for (auto _ : state) benchmark::DoNotOptimize(sparse_random_projection(p, 5, rng));
}
BENCHMARK(BM_SparseRandomProjection)->Arg(200)->Arg(1000);

void BM_GeneralizedEigenpairs(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto pair = iw_pair(p);
  for (auto _ : state) benchmark::DoNotOptimize(generalized_eigenpairs(pair.first, pair.second, 0.0));
}
BENCHMARK(BM_GeneralizedEigenpairs)->Arg(20)->Arg(200)->Arg(500);

void BM_IwPair(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  RngStream rng(4, {});
  for (auto _ : state) {
    rng = rng.fork(1);
    benchmark::DoNotOptimize(gen_iw_pair(p, 2.0 * p, 2.0 * p, rng));
  }
}
BENCHMARK(BM_IwPair)->Arg(20)->Arg(200);

void BM_McBayesRisk(benchmark::State& state) {
  const auto pair = iw_pair(30);
  const auto model = TwoClassGaussian::centered(pair.first, pair.second);
  const auto w = pca_projection(mixture(pair), 5);
  const RngStream rng(5, {});
  for (auto _ : state) benchmark::DoNotOptimize(mc_bayes_risk(model, w, state.range(0), rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McBayesRisk)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
