#include <benchmark/benchmark.h>

#include "theta_lab/curve_spec.hpp"
#include "theta_lab/hilbert_fit.hpp"
#include "theta_lab/hyperelliptic.hpp"
#include "theta_lab/verlinde.hpp"

namespace {

using theta_lab::Fp;
using theta_lab::HyperellipticCurve;

HyperellipticCurve<Fp> curve_over(std::uint64_t p) {
  return std::get<HyperellipticCurve<Fp>>(theta_lab::new_curve(
      theta_lab::parse_curve_spec("field=Fp:" + std::to_string(p) + "; f=5,3,0,0,0")));
}

void BM_VerlindeP2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(theta_lab::verlinde_p2());
}
BENCHMARK(BM_VerlindeP2)->Unit(benchmark::kMillisecond);

void BM_FitHilbert(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(theta_lab::fit_hilbert(1, 10, 58));
}
BENCHMARK(BM_FitHilbert);

// Repeated addition of a fixed class; the argument is the field characteristic.
void BM_CantorAdd(benchmark::State& state) {
  const auto curve = curve_over(static_cast<std::uint64_t>(state.range(0)));
  const auto points = theta_lab::rational_points(curve);
  // Points come sorted by x, so the first and the last affine point have distinct x.
  const auto a = curve.cantor_add(curve.point_divisor(points.front()),
                                  curve.point_divisor(points[points.size() - 2]));
  auto acc = a;
  for (auto _ : state) {
    acc = curve.cantor_add(acc, a);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_CantorAdd)->Arg(13)->Arg(1009)->Arg(65521);

void BM_ScalarMul(benchmark::State& state) {
  const auto curve = curve_over(65521);
  const auto points = theta_lab::rational_points(curve);
  const auto a = curve.point_divisor(points[0]);
  for (auto _ : state) benchmark::DoNotOptimize(curve.scalar_mul(a, state.range(0)));
}
BENCHMARK(BM_ScalarMul)->Range(8, 1 << 20);

void BM_EnumeratePic(benchmark::State& state) {
  const auto curve = curve_over(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(theta_lab::enumerate_pic(curve, 0));
}
BENCHMARK(BM_EnumeratePic)->Arg(5)->Arg(13)->Arg(37)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
