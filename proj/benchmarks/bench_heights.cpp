#include <benchmark/benchmark.h>

#include "eah/canonical_height.hpp"
#include "eah/extremal.hpp"
#include "eah/local_heights.hpp"
#include "eah/search.hpp"
#include "eah/sweep.hpp"

using namespace eah;

static void BM_CanonicalHeight(benchmark::State& state) {
  const Curve c(56628);
  const Point p = multiply(c, state.range(0), Point::affine(198, 4356));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_height(c, p).canonical);
}
BENCHMARK(BM_CanonicalHeight)->Arg(1)->Arg(4)->Arg(16);

static void BM_CanonicalHeightExtended(benchmark::State& state) {
  const Curve c(-2);
  const Point p = Point::affine(-1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_height(c, p, {80, Precision::Extended}).canonical);
}
BENCHMARK(BM_CanonicalHeightExtended);

static void BM_LimitOracle(benchmark::State& state) {
  const Curve c(3);
  const Point p = Point::affine(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(limit_oracle(c, p, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_LimitOracle)->Arg(6)->Arg(8);

static void BM_Classify(benchmark::State& state) {
  const Curve c(-6003725);
  for (auto _ : state) benchmark::DoNotOptimize(classify_bad_primes(c).size());
}
BENCHMARK(BM_Classify);

static void BM_Halving(benchmark::State& state) {
  const Curve c(-6003725);
  const Rational xi(9801, 4);
  for (auto _ : state) benchmark::DoNotOptimize(halve_point(c, xi).size());
}
BENCHMARK(BM_Halving);

static void BM_Search(benchmark::State& state) {
  const Curve c(-198);
  for (auto _ : state) benchmark::DoNotOptimize(search_points(c, static_cast<unsigned>(state.range(0))).size());
}
BENCHMARK(BM_Search)->Arg(30)->Arg(100);

static void BM_Sweep(benchmark::State& state) {
  SweepOptions opts;
  opts.amin = -20;
  opts.amax = 20;
  opts.search_bound = 40;
  opts.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sweep(opts).rows.size());
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
