// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "cubefarey/analysis.hpp"
#include "cubefarey/families.hpp"
#include "cubefarey/stepped.hpp"

using namespace cubefarey;

namespace {

PointPair ex1() {
  return PointPair(CubicField::make({Rational(-2), 0, 0}, {1, 2}),
                   FieldElement(Rational(2, 3), Rational(-2, 3), Rational(1, 6)),
                   FieldElement(Rational(2, 3), Rational(1, 3), Rational(-1, 3)));
}

void BM_Sign(benchmark::State& state) {
  const PointPair p = ex1();
  const FieldElement x = p.alpha() - p.beta();
  for (auto _ : state) benchmark::DoNotOptimize(p.field().sign(x));
}
BENCHMARK(BM_Sign);

void BM_Step(benchmark::State& state) {
  const PointPair p = ex1();
  const ValueExponent r;
  for (auto _ : state) benchmark::DoNotOptimize(step(p, r));
}
BENCHMARK(BM_Step);

void BM_DetectPeriodPureCubic(benchmark::State& state) {
  const PointPair p = purecubic_point(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(detect_period(p, ValueExponent()));
}
BENCHMARK(BM_DetectPeriodPureCubic)->Arg(2)->Arg(5)->Arg(19)->Unit(benchmark::kMillisecond);

void BM_GrowPatch(benchmark::State& state) {
  const PointPair p = ex1();
  const auto digits = detect_period(p, ValueExponent()).digits;
  std::vector<IndexPair> word;
  for (long k = 0; k < state.range(0); ++k) word.insert(word.end(), digits.begin(), digits.end());
  for (auto _ : state) benchmark::DoNotOptimize(grow_patch(word, Seed::U));
}
BENCHMARK(BM_GrowPatch)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
