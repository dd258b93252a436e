#include <benchmark/benchmark.h>

#include "support/fixtures.hpp"

using namespace galtrop;
using namespace galtrop::testing;

static void PuiseuxMultiply(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  RandomData rnd(1);
  const PuiseuxSeries a = rnd.puiseux(level, 8);
  const PuiseuxSeries b = rnd.puiseux(level, 8);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(PuiseuxMultiply)->Arg(1)->Arg(3)->Arg(12);

static void CyclotomicInverse(benchmark::State& state) {
  RandomData rnd(2);
  Cyclotomic c = rnd.cyclotomic(static_cast<int>(state.range(0)));
  if (c.is_zero()) c = Cyclotomic::from_rational(static_cast<int>(state.range(0)), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(c.inverse());
}
BENCHMARK(CyclotomicInverse)->Arg(3)->Arg(12)->Arg(30);

static void GaloisTwist(benchmark::State& state) {
  RandomData rnd(3);
  const PuiseuxSeries a = rnd.puiseux(12, 8);
  for (auto _ : state) benchmark::DoNotOptimize(galois_twist(5, a));
}
BENCHMARK(GaloisTwist);

BENCHMARK_MAIN();
