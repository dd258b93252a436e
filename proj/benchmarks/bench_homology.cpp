#include <benchmark/benchmark.h>

#include "galtrop/homology.hpp"
#include "support/fixtures.hpp"

using namespace galtrop;
using namespace galtrop::testing;

static void SexticDims(benchmark::State& state) {
  const TropicalComplex c = close_in_toric_surface(trop_curve_2d(brauer_severi_sextic()), p2_fan());
  for (auto _ : state) benchmark::DoNotOptimize(homology_dims(c));
}
BENCHMARK(SexticDims)->Unit(benchmark::kMillisecond);

static void SexticRepresentation(benchmark::State& state) {
  const TropicalComplex c = close_in_toric_surface(trop_curve_2d(brauer_severi_sextic()), p2_fan());
  const TwistedToricVariety t = z3_twist();
  for (auto _ : state) benchmark::DoNotOptimize(homology_report(c, t));
}
BENCHMARK(SexticRepresentation)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
