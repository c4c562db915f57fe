/* SPDX-License-Identifier: Apache-2.0
 *
 * Micro-benchmarks for the chain search, exact radical comparison and the
 * root enumeration.
 */
#include <benchmark/benchmark.h>

#include "k3wall/exactnum.hpp"
#include "k3wall/plane.hpp"
#include "k3wall/polysearch.hpp"

using namespace k3wall;

static void BM_ChainSearch(benchmark::State& state) {
  const Surface X(state.range(0));
  SearchOptions opt;
  opt.phase2 = false;
  for (auto _ : state) benchmark::DoNotOptimize(max_interior_bound(X, SearchMode::Refined, opt));
}
BENCHMARK(BM_ChainSearch)->Arg(13)->Arg(17)->Unit(benchmark::kMillisecond);

static void BM_RadicalCmpClose(benchmark::State& state) {
  /* sqrt(10) + sqrt(11) vs 3 + sqrt(12): differ in the third decimal */
  const RadicalSum x = RadicalSum::sqrt_of(Integer(10)) + RadicalSum::sqrt_of(Integer(11));
  const RadicalSum y = RadicalSum::from_rational(Rational(3)) + RadicalSum::sqrt_of(Integer(12));
  for (auto _ : state) benchmark::DoNotOptimize(radical_cmp(x, y));
}
BENCHMARK(BM_RadicalCmpClose);

static void BM_RadicalCmpEqual(benchmark::State& state) {
  const RadicalSum x = RadicalSum::sqrt_of(Integer(8)) + RadicalSum::sqrt_of(Integer(3));
  const RadicalSum y = RadicalSum::term(Rational(2), Integer(2)) + RadicalSum::sqrt_of(Integer(3));
  for (auto _ : state) benchmark::DoNotOptimize(radical_cmp(x, y));
}
BENCHMARK(BM_RadicalCmpEqual);

static void BM_GreyRootScan(benchmark::State& state) {
  const Surface X(23);
  const Region reg = grey_region(X);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_roots_in_region(reg, X, state.range(0)));
}
BENCHMARK(BM_GreyRootScan)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
