#include <benchmark/benchmark.h>

#include <random>

#include "wulff/wulff.hpp"

using namespace wulff;

namespace {

std::vector<UnitPoint> cap_points(int dim, int count, std::uint64_t seed) {
  return sample_cap(pole(dim), Angle(1.0), seed, count);
}

void BM_DualConversion(benchmark::State& state) {
  const auto pts = cap_points(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(dual_cone_convert(pts));
}
BENCHMARK(BM_DualConversion)->Args({2, 12})->Args({2, 64})->Args({3, 12})->Args({3, 32});

void BM_Polar(benchmark::State& state) {
  const SphericalBody w = gen_wulff(pole(2), static_cast<int>(state.range(0)), 0.8, 3);
  for (auto _ : state) benchmark::DoNotOptimize(polar(w));
}
BENCHMARK(BM_Polar)->Arg(6)->Arg(12);

void BM_HausdorffExact(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const SphericalBody a = gen_convex(dim, 10);
  const SphericalBody b = gen_convex(dim, 11);
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff(a, b));
}
BENCHMARK(BM_HausdorffExact)->Arg(2)->Arg(3);

void BM_HausdorffSampled(benchmark::State& state) {
  const SphericalBody a = gen_convex(2, 10);
  const SphericalBody b = gen_convex(2, 11);
  DistanceOptions opts;
  opts.force_sampling = true;
  opts.resolution = 0.005;
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff(a, b, opts));
}
BENCHMARK(BM_HausdorffSampled);

}  // namespace
BENCHMARK_MAIN();
