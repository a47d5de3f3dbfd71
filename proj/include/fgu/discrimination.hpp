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

#include <span>
#include <string_view>
#include <vector>

#include "fgu/bounds.hpp"
#include "fgu/measurements.hpp"

namespace fgu {

/// The qubit states (cos t, +-sin t) with overlap eta = cos 2t.
class DiscriminationPair {
 public:
  /// theta in (0, pi/4).
  static DiscriminationPair from_theta(double theta);
  /// eta in (0, 1).
  static DiscriminationPair from_eta(double eta);
  /// eta in [0, 1]; the endpoints (orthogonal and identical states) are
  /// reachable only here and carry is_limit() == true.
  static DiscriminationPair limit(double eta);

  double theta() const { return theta_; }
  double eta() const { return eta_; }
  bool is_limit() const { return limit_; }
  ComplexVector plus() const;
  ComplexVector minus() const;

 private:
  DiscriminationPair(double theta, double eta, bool limit) : theta_(theta), eta_(eta), limit_(limit) {}
  double theta_;
  double eta_;
  bool limit_;
};

/// Projectors onto (1, +-1)/sqrt 2, order (+, -).
MeasurementSet helstrom_povm();
/// Unambiguous three-outcome POVM, order (+, -, ?).
MeasurementSet b92_povm(const DiscriminationPair& pair);

/// Helstrom success probability (1 + sqrt(1 - eta^2))/2.
double helstrom_success(double eta);
/// Conclusive-answer probability of the B92 POVM for equiprobable inputs.
double b92_conclusive_probability(const DiscriminationPair& pair);
/// a(eta) = 2 eta / (1 + eta), the weight of |0><0| in M_?.
double inconclusive_weight(double eta);

enum class Scenario { inconclusive, matched, mismatched };

Scenario parse_scenario(std::string_view name);
std::string_view scenario_name(Scenario s);

struct ScenarioBound {
  double value = 0.0;
  /// eta at 0 or 1, where the value is a continuous extension.
  bool limit = false;
};

/// (1/2)(1 + sqrt(1 + 2 eta + 5 eta^2)/(1 + 3 eta)); {N_+-, M_?}.
ScenarioBound bound_inconclusive(double eta);
/// (1/2)(1 + sqrt(eta^2 + 4(1 + eta) P_D)/(2 + eta)); {N_j, M_j}.
ScenarioBound bound_matched(double eta);
/// As bound_matched with the Helstrom error probability 1 - P_D; {N_j, M_-j}.
ScenarioBound bound_mismatched(double eta);
ScenarioBound scenario_bound(Scenario s, double eta);

/// The 2x2 sum N + M exactly as written in closed form, for sign = +1 or -1
/// (the Helstrom outcome).
ComplexMatrix printed_matrix(Scenario s, const DiscriminationPair& pair, int sign);

/// Generic spectral bound over {helstrom, b92} for the scenario's selection.
BoundResult exact_scenario_bound(Scenario s, const DiscriminationPair& pair, int sign);

struct ScenarioRow {
  double eta = 0.0;
  double closed_form = 0.0;
  double exact = 0.0;
  /// max over both signs of |closed_form - exact|
  double residual = 0.0;
};

/// One row per grid point, in grid order.
std::vector<ScenarioRow> scenario_sweep(Scenario s, std::span<const double> etas);

}  // namespace fgu
