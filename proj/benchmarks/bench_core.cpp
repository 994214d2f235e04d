// Copyright 2026 The rucbound developers
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

#include <numbers>

#include "rucb/bounds.hpp"

using namespace rucb;

static void BM_EigHermitian4(benchmark::State& state) {
  Rng rng(1);
  const ChoiMatrix j = choi(sample_ru_channel(rng, 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_hermitian(j.matrix()));
  }
}
BENCHMARK(BM_EigHermitian4);

static void BM_Choi(benchmark::State& state) {
  Rng rng(2);
  const RandomUnitaryChannel ch = sample_ru_channel(rng, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(choi(ch));
  }
}
BENCHMARK(BM_Choi);

static void BM_BoundC(benchmark::State& state) {
  Rng rng(3);
  const Scenario s = sample_scenario(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bound_C(s));
  }
}
BENCHMARK(BM_BoundC);

static void BM_FefGeneral(benchmark::State& state) {
  Rng rng(4);
  const QubitState a = sample_state(rng), b = sample_state(rng);
  const QubitState c = sample_state(rng), d = sample_state(rng);
  const ComplexMatrix rho = two_product_mixture_state(0.4, a, b, c, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fef_general(rho));
  }
}
BENCHMARK(BM_FefGeneral);

static void BM_FefNumeric(benchmark::State& state) {
  Rng rng(5);
  const QubitState a = sample_state(rng), b = sample_state(rng);
  const QubitState c = sample_state(rng), d = sample_state(rng);
  const ComplexMatrix rho = two_product_mixture_state(0.4, a, b, c, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fef_numeric(rho));
  }
}
BENCHMARK(BM_FefNumeric);

static void BM_BruteForceC(benchmark::State& state) {
  const Scenario s = example_scenario(std::numbers::pi, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_C(s));
  }
}
BENCHMARK(BM_BruteForceC);

BENCHMARK_MAIN();
