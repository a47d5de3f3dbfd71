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

#pragma once

// Data-parallel kernels behind the sampling oracle and the selection sweeps.
// Each kernel has a serial reference implementation and an OpenMP one; both
// return identical results for identical input, independent of thread count.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fgu/bounds.hpp"
#include "fgu/measurements.hpp"

namespace fgu::kernels {

/// Objective sum_t w_t <psi|M_t|psi> / S, one term per selected element.
struct SamplingProblem {
  std::size_t dim = 0;
  std::vector<ComplexMatrix> elements;
  std::vector<double> weights;
  double normalizer = 1.0;

  static SamplingProblem from_selection(std::span<const MeasurementSet> sets, const OutcomeSelection& sel,
                                        Normalization norm = Normalization::per_element_norm);
  /// Objective at the Haar state drawn from seed `seed`.
  double evaluate(std::uint64_t seed) const;
};

struct SampledMax {
  double value = 0.0;
  /// Sample index of the maximum; the state was drawn from seed + argmax.
  /// Ties resolve to the lowest index.
  std::uint64_t argmax = 0;
};

/// Max of the objective over Haar states with seeds seed, seed+1, ...
SampledMax sampled_max_serial(const SamplingProblem& problem, std::uint64_t samples, std::uint64_t seed);
SampledMax sampled_max_parallel(const SamplingProblem& problem, std::uint64_t samples, std::uint64_t seed);

/// One element choice inside a pool of measurements.
struct Pick {
  std::size_t measurement = 0;
  std::size_t outcome = 0;
};
using PickList = std::vector<Pick>;

/// Exact bound value of every case (equal weights), in case order.
std::vector<double> selection_values_serial(std::span<const MeasurementSet> pool, std::span<const PickList> cases,
                                            Normalization norm);
std::vector<double> selection_values_parallel(std::span<const MeasurementSet> pool, std::span<const PickList> cases,
                                              Normalization norm);

/// Shared per-case evaluation used by both implementations.
double selection_value(std::span<const MeasurementSet> pool, const PickList& picks, Normalization norm);

}  // namespace fgu::kernels
