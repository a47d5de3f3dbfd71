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

#include <stdexcept>

#include "fgu/kernels.hpp"

namespace fgu::kernels {

SamplingProblem SamplingProblem::from_selection(std::span<const MeasurementSet> sets, const OutcomeSelection& sel,
                                                Normalization norm) {
  SamplingProblem p;
  p.normalizer = selection_normalizer(sets, sel, norm);
  p.dim = sets.front().dim;
  for (std::size_t t = 0; t < sets.size(); ++t) {
    p.elements.push_back(sets[t].elements[sel.outcomes[t]]);
    p.weights.push_back(sel.weight(t));
  }
  return p;
}

double SamplingProblem::evaluate(std::uint64_t seed) const {
  const auto psi = haar_random_vector(dim, seed);
  double total = 0.0;
  for (std::size_t t = 0; t < elements.size(); ++t) {
    if (weights[t] != 0.0) total += weights[t] * elements[t].expectation(psi).real();
  }
  return total / normalizer;
}

SampledMax sampled_max_serial(const SamplingProblem& problem, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("sampled_max: samples must be >= 1");
  SampledMax best{problem.evaluate(seed), 0};
  for (std::uint64_t i = 1; i < samples; ++i) {
    const double v = problem.evaluate(seed + i);
    if (v > best.value) best = {v, i};
  }
  return best;
}

double selection_value(std::span<const MeasurementSet> pool, const PickList& picks, Normalization norm) {
  std::vector<MeasurementSet> sets;
  sets.reserve(picks.size());
  OutcomeSelection sel;
  for (const auto& p : picks) {
    if (p.measurement >= pool.size() || p.outcome >= pool[p.measurement].size()) {
      throw std::invalid_argument("selection_value: pick out of range");
    }
    const auto& m = pool[p.measurement];
    sets.push_back({m.dim, m.kind, {m.elements[p.outcome]}});
    sel.outcomes.push_back(0);
  }
  return exact_fg_value(sets, sel, norm);
}

std::vector<double> selection_values_serial(std::span<const MeasurementSet> pool, std::span<const PickList> cases,
                                            Normalization norm) {
  std::vector<double> out(cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i) out[i] = selection_value(pool, cases[i], norm);
  return out;
}

}  // namespace fgu::kernels
