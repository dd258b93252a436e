#include <benchmark/benchmark.h>

#include "galtrop/complex.hpp"
#include "support/fixtures.hpp"

using namespace galtrop;
using namespace galtrop::testing;

static void SexticCurve(benchmark::State& state) {
  const LaurentPolynomial f = brauer_severi_sextic();
  for (auto _ : state) benchmark::DoNotOptimize(trop_curve_2d(f));
}
BENCHMARK(SexticCurve)->Unit(benchmark::kMillisecond);

static void SexticClosure(benchmark::State& state) {
  const TropicalComplex c = trop_curve_2d(brauer_severi_sextic());
  const Fan fan = p2_fan();
  for (auto _ : state) benchmark::DoNotOptimize(close_in_toric_surface(c, fan));
}
BENCHMARK(SexticClosure)->Unit(benchmark::kMillisecond);

static void SexticEquivariance(benchmark::State& state) {
  const TropicalComplex c = close_in_toric_surface(trop_curve_2d(brauer_severi_sextic()), p2_fan());
  const TwistedToricVariety t = z3_twist();
  for (auto _ : state) benchmark::DoNotOptimize(check_complex_equivariance(c, t));
}
BENCHMARK(SexticEquivariance)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
