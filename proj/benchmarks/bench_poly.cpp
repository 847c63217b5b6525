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

#include <random>

#include "ztower/division.hpp"
#include "ztower/factor.hpp"
#include "ztower/mod_poly.hpp"

namespace {

using namespace ztower;

IntPoly random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<long> d(-100, 100);
  std::vector<Integer> c(degree + 1);
  for (auto& x : c) x = d(rng);
  c.back() = 1 + std::abs(d(rng));
  return IntPoly(c);
}

void BM_Resultant(benchmark::State& state) {
  std::mt19937_64 rng(1);
  IntPoly f = random_poly(rng, static_cast<int>(state.range(0)));
  IntPoly g = random_poly(rng, static_cast<int>(state.range(0)) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(resultant(f, g));
}
BENCHMARK(BM_Resultant)->Arg(10)->Arg(40)->Arg(100);

void BM_FactorModP(benchmark::State& state) {
  std::mt19937_64 rng(2);
  IntPoly f = random_poly(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(factor_mod_p(f, 1000003));
}
BENCHMARK(BM_FactorModP)->Arg(20)->Arg(80)->Arg(320);

void BM_FactorOverQ(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int d = static_cast<int>(state.range(0));
  IntPoly f = random_poly(rng, d / 2) * random_poly(rng, d - d / 2);
  for (auto _ : state) benchmark::DoNotOptimize(factor_over_Q(f));
}
BENCHMARK(BM_FactorOverQ)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_DivisionPolynomial(benchmark::State& state) {
  for (auto _ : state) {
    DivisionPolynomials dp(Integer(-432), Integer(8208));
    benchmark::DoNotOptimize(dp.reduced(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_DivisionPolynomial)->Arg(9)->Arg(16)->Arg(27)->Unit(benchmark::kMillisecond);

void BM_ExactOrder27(benchmark::State& state) {
  for (auto _ : state) {
    DivisionPolynomials dp(Integer(-432), Integer(8208));
    benchmark::DoNotOptimize(small_degree_factors(dp.exact_order(27), 9));
  }
}
BENCHMARK(BM_ExactOrder27)->Unit(benchmark::kMillisecond);

}  // namespace
