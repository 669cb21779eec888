#include <benchmark/benchmark.h>

#include "cybe/catalog.hpp"
#include "cybe/frobenius.hpp"
#include "cybe/schouten.hpp"

using namespace cybe;
using namespace cybe::basis;

static void BM_SchoutenR12(benchmark::State& state) {
  auto entries = load_catalog(CYBE_TEST_CATALOG);
  const BiVector& r12 = catalog_find(entries, "r12").rmatrix;
  for (auto _ : state) benchmark::DoNotOptimize(schouten_self(r12));
}
BENCHMARK(BM_SchoutenR12);

static void BM_MixedSchouten(benchmark::State& state) {
  auto entries = load_catalog(CYBE_TEST_CATALOG);
  const BiVector& a = catalog_find(entries, "r10_1a").rmatrix;
  const BiVector& b = catalog_find(entries, "r10_3a").rmatrix;
  for (auto _ : state) benchmark::DoNotOptimize(schouten_mixed(a, b));
}
BENCHMARK(BM_MixedSchouten);

static void BM_GenericPfaffian10(benchmark::State& state) {
  const LieAlgebra& g = LieAlgebra::sl4();
  Subalgebra p2 = parabolic(g, {EM2});
  Functional f;
  f.algebra = &g;
  for (int t = 0; t < p2.dim(); ++t)
    f.coeffs[p2.members[t]] = MultiPoly::var(static_cast<Param>(static_cast<int>(Param::c1) + t));
  SkewForm form = form_from_functional(f, p2);
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(form));
}
BENCHMARK(BM_GenericPfaffian10);

static void BM_RmatrixFromFunctional(benchmark::State& state) {
  const LieAlgebra& g = LieAlgebra::sl4();
  auto entries = load_catalog(CYBE_TEST_CATALOG);
  Subalgebra p1 = parabolic(g, {EM1});
  const Functional& g1a = catalog_find(entries, "g1a").functional;
  for (auto _ : state) benchmark::DoNotOptimize(rmatrix_from_functional(g1a, p1, "g1a"));
}
BENCHMARK(BM_RmatrixFromFunctional);

static void BM_CatalogLoad(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(load_catalog(CYBE_TEST_CATALOG));
}
BENCHMARK(BM_CatalogLoad);

BENCHMARK_MAIN();
