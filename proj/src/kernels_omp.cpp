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

#include <exception>
#include <mutex>
#include <stdexcept>

#include <omp.h>

#include "fgu/kernels.hpp"

namespace fgu::kernels {

SampledMax sampled_max_parallel(const SamplingProblem& problem, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("sampled_max: samples must be >= 1");
  SampledMax best{problem.evaluate(seed), 0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto n = static_cast<std::int64_t>(samples);

#pragma omp parallel
  {
    SampledMax local = best;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 1; i < n; ++i) {
      try {
        const double v = problem.evaluate(seed + static_cast<std::uint64_t>(i));
        if (v > local.value) local = {v, static_cast<std::uint64_t>(i)};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(fgu_sampled_max)
    {
      if (local.value > best.value || (local.value == best.value && local.argmax < best.argmax)) best = local;
    }
  }
  if (failure) std::rethrow_exception(failure);
  return best;
}

std::vector<double> selection_values_parallel(std::span<const MeasurementSet> pool, std::span<const PickList> cases,
                                              Normalization norm) {
  std::vector<double> out(cases.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto n = static_cast<std::int64_t>(cases.size());

#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = selection_value(pool, cases[static_cast<std::size_t>(i)], norm);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace fgu::kernels
