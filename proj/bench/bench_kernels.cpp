// Copyright 2026 The fgu Authors
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

#include <omp.h>

#include "fgu/kernels.hpp"
#include "fgu/measurements.hpp"

namespace {

using namespace fgu::kernels;

SamplingProblem make_problem(std::size_t d) {
  std::vector<fgu::MeasurementSet> sets;
  for (const auto& b : fgu::mub_family_prime(d)) sets.push_back(b.measurement());
  const fgu::OutcomeSelection sel{std::vector<std::size_t>(sets.size(), 0), {}};
  return SamplingProblem::from_selection(sets, sel);
}

std::vector<PickList> make_cases(std::size_t d, std::size_t count) {
  std::vector<PickList> cases(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t code = i;
    for (std::size_t t = 0; t <= d; ++t) {
      cases[i].push_back({t, code % d});
      code /= d;
    }
  }
  return cases;
}

void BM_SampledMaxSerial(benchmark::State& state) {
  const auto problem = make_problem(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sampled_max_serial(problem, 10000, 1));
  state.SetItemsProcessed(state.iterations() * 10000);
}

void BM_SampledMaxParallel(benchmark::State& state) {
  const auto problem = make_problem(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sampled_max_parallel(problem, 10000, 1));
  state.SetItemsProcessed(state.iterations() * 10000);
  state.counters["threads"] = omp_get_max_threads();
}

void BM_SelectionValuesSerial(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::vector<fgu::MeasurementSet> pool;
  for (const auto& b : fgu::mub_family_prime(d)) pool.push_back(b.measurement());
  const auto cases = make_cases(d, 2000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(selection_values_serial(pool, cases, fgu::Normalization::per_element_norm));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cases.size()));
}

void BM_SelectionValuesParallel(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::vector<fgu::MeasurementSet> pool;
  for (const auto& b : fgu::mub_family_prime(d)) pool.push_back(b.measurement());
  const auto cases = make_cases(d, 2000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(selection_values_parallel(pool, cases, fgu::Normalization::per_element_norm));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cases.size()));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_SampledMaxSerial)->Arg(3)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampledMaxParallel)->Arg(3)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SelectionValuesSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SelectionValuesParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
