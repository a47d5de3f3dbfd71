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

#include <catch_amalgamated.hpp>

#include <omp.h>

#include "fgu/kernels.hpp"
#include "fgu/measurements.hpp"

using namespace fgu::kernels;
using fgu::MeasurementSet;
using fgu::OutcomeSelection;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<MeasurementSet> mub_sets(std::size_t d) {
  std::vector<MeasurementSet> out;
  for (const auto& b : fgu::mub_family_prime(d)) out.push_back(b.measurement());
  return out;
}

}  // namespace

TEST_CASE("sampling problem evaluates the normalized weighted sum", "[kernels]") {
  const auto sets = mub_sets(3);
  const OutcomeSelection sel{{0, 1, 2, 0}, {1.0, 2.0, 0.5, 1.5}};
  const auto problem = SamplingProblem::from_selection(sets, sel);
  CHECK_THAT(problem.normalizer, WithinAbs(5.0, 1e-15));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto rho = fgu::haar_random_pure(3, seed);
    double expected = 0.0;
    for (std::size_t t = 0; t < 4; ++t) {
      expected += sel.weight(t) * fgu::outcome_probability(sets[t].elements[sel.outcomes[t]], rho);
    }
    CHECK_THAT(problem.evaluate(seed), WithinAbs(expected / 5.0, 1e-12));
  }
}

TEST_CASE("parallel sampled max equals the serial reference", "[kernels]") {
  const int saved = omp_get_max_threads();
  for (int threads : {1, 2, 4, 7}) {
    omp_set_num_threads(threads);
    for (std::size_t d : {2u, 3u, 5u}) {
      const auto sets = mub_sets(d);
      const OutcomeSelection sel{std::vector<std::size_t>(d + 1, 1), {}};
      const auto problem = SamplingProblem::from_selection(sets, sel);
      for (std::uint64_t samples : {1ull, 17ull, 2000ull}) {
        const auto a = sampled_max_serial(problem, samples, 99 + d);
        const auto b = sampled_max_parallel(problem, samples, 99 + d);
        CHECK(a.value == b.value);
        CHECK(a.argmax == b.argmax);
      }
    }
  }
  omp_set_num_threads(saved);
}

TEST_CASE("parallel selection values equal the serial reference", "[kernels]") {
  const auto pool = mub_sets(5);
  std::vector<PickList> cases;
  for (std::size_t code = 0; code < 300; ++code) {
    PickList picks;
    for (std::size_t t = 0; t < 1 + code % 6; ++t) picks.push_back({(code + 2 * t) % 6, (code / 6 + t) % 5});
    cases.push_back(picks);
  }
  const int saved = omp_get_max_threads();
  for (int threads : {1, 3}) {
    omp_set_num_threads(threads);
    const auto a = selection_values_serial(pool, cases, fgu::Normalization::per_element_norm);
    const auto b = selection_values_parallel(pool, cases, fgu::Normalization::per_element_norm);
    REQUIRE(a.size() == cases.size());
    CHECK(a == b);
    for (std::size_t i = 0; i < cases.size(); i += 37) {
      CHECK(a[i] == selection_value(pool, cases[i], fgu::Normalization::per_element_norm));
    }
  }
  omp_set_num_threads(saved);
}

TEST_CASE("kernel errors propagate out of parallel regions", "[kernels]") {
  const auto pool = mub_sets(3);
  const std::vector<PickList> cases{{{0, 0}}, {{0, 7}}};
  CHECK_THROWS_AS(selection_values_parallel(pool, cases, fgu::Normalization::per_element_norm),
                  std::invalid_argument);
  CHECK_THROWS_AS(selection_values_serial(pool, cases, fgu::Normalization::per_element_norm),
                  std::invalid_argument);
}
