#include <benchmark/benchmark.h>

#include "pellsurf/classmap.hpp"

using namespace pellsurf;

static void BM_AddThreePoint(benchmark::State& state) {
  auto ctx = make_context(229);
  SurfacePoint p{3, 3, 92, 13};
  SurfacePoint q{3, 3, 17, -2};
  for (auto _ : state) benchmark::DoNotOptimize(add(ctx, p, q));
}
BENCHMARK(BM_AddThreePoint);

static void BM_ScalarMul(benchmark::State& state) {
  auto ctx = make_context(-23);
  SurfacePoint p{3, 2, 1, 1};
  BigInt k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(scalar_mul(ctx, p, k));
}
BENCHMARK(BM_ScalarMul)->Arg(10)->Arg(100)->Arg(1000);

static void BM_ClassGroup(benchmark::State& state) {
  auto ctx = make_context(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(class_group(ctx));
}
BENCHMARK(BM_ClassGroup)->Arg(-23)->Arg(-3299)->Arg(229)->Arg(13260);

static void BM_ReduceIndefinite(benchmark::State& state) {
  QuadraticForm g{3, 5, -17};
  for (auto _ : state) benchmark::DoNotOptimize(reduce(g));
}
BENCHMARK(BM_ReduceIndefinite);

static void BM_Enumerate(benchmark::State& state) {
  auto ctx = make_context(-23);
  EnumerationOptions opts{state.range(0), 1, false, 1};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_points(ctx, 3, opts));
}
BENCHMARK(BM_Enumerate)->Arg(12)->Arg(50);

static void BM_AxiomSuite(benchmark::State& state) {
  auto ctx = make_context(-23);
  std::vector<RawPoint> raws;
  for (auto const& p : enumerate_points(ctx, 3, {12, 1, false, 1}).points) raws.push_back(raw(p));
  for (auto _ : state) benchmark::DoNotOptimize(axiom_suite(ctx, 3, raws, {2000, kDefaultSeed, 1}));
}
BENCHMARK(BM_AxiomSuite)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
