// Copyright 2026 The ztower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "ztower/classifier.hpp"
#include "ztower/families.hpp"
#include "ztower/torsion.hpp"

namespace {

using namespace ztower;

const std::array<long, 5> kCurves[] = {
    {0, -1, 0, 11, -19},  // 704d1
    {1, 0, 1, -36, -70},  // 14a2
    {0, 0, 1, -30, 63},   // 27a4
    {1, -1, 1, -5, 5},    // 162b1
};

void BM_RationalTorsion(benchmark::State& state) {
  Curve E = Curve::from_ainvs(kCurves[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(rational_torsion(E));
}
BENCHMARK(BM_RationalTorsion)->DenseRange(0, 3);

void BM_ClassifyP2(benchmark::State& state) {
  Curve E = Curve::from_ainvs(kCurves[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(classify(E, 2));
}
BENCHMARK(BM_ClassifyP2)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ClassifyP3(benchmark::State& state) {
  Curve E = Curve::from_ainvs(kCurves[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(classify(E, 3));
}
BENCHMARK(BM_ClassifyP3)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_GenerateTrivToZ7(benchmark::State& state) {
  FamilyParams params;
  params.family = Family::TrivToZ7;
  params.p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gen_curve(params));
}
BENCHMARK(BM_GenerateTrivToZ7)->Arg(7)->Arg(79)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
