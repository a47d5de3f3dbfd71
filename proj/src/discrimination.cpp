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

#include "fgu/discrimination.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fgu {

namespace {

void require_closed_unit(double eta, const char* what) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument(std::string(what) + ": eta must lie in [0, 1]");
}

bool at_endpoint(double eta) { return eta == 0.0 || eta == 1.0; }

double matched_family(double eta, double p) {
  return 0.5 * (1.0 + std::sqrt(eta * eta + 4.0 * (1.0 + eta) * p) / (2.0 + eta));
}

}  // namespace

DiscriminationPair DiscriminationPair::from_theta(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi / 4.0)) {
    throw std::invalid_argument("DiscriminationPair: theta must lie in (0, pi/4)");
  }
  return {theta, std::cos(2.0 * theta), false};
}

DiscriminationPair DiscriminationPair::from_eta(double eta) {
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("DiscriminationPair: eta must lie in (0, 1)");
  return {0.5 * std::acos(eta), eta, false};
}

DiscriminationPair DiscriminationPair::limit(double eta) {
  require_closed_unit(eta, "DiscriminationPair::limit");
  return {0.5 * std::acos(eta), eta, at_endpoint(eta)};
}

ComplexVector DiscriminationPair::plus() const { return {std::cos(theta_), std::sin(theta_)}; }
ComplexVector DiscriminationPair::minus() const { return {std::cos(theta_), -std::sin(theta_)}; }

MeasurementSet helstrom_povm() {
  const double r = 1.0 / std::sqrt(2.0);
  return {2, MeasurementKind::projective,
          {ComplexMatrix::outer(ComplexVector{r, r}), ComplexMatrix::outer(ComplexVector{r, -r})}};
}

MeasurementSet b92_povm(const DiscriminationPair& pair) {
  const double s = std::sin(pair.theta());
  const double c = std::cos(pair.theta());
  const ComplexVector m_plus{s, -c};
  const ComplexVector m_minus{s, c};
  const Complex scale = 1.0 / (1.0 + pair.eta());
  ComplexMatrix plus = ComplexMatrix::outer(m_minus) * scale;
  ComplexMatrix minus = ComplexMatrix::outer(m_plus) * scale;
  ComplexMatrix unknown = ComplexMatrix::identity(2) - plus - minus;
  return {2, MeasurementKind::general, {std::move(plus), std::move(minus), std::move(unknown)}};
}

double helstrom_success(double eta) {
  require_closed_unit(eta, "helstrom_success");
  return 0.5 * (1.0 + std::sqrt(1.0 - eta * eta));
}

double b92_conclusive_probability(const DiscriminationPair& pair) {
  const double s2 = std::sin(2.0 * pair.theta());
  return s2 * s2 / (1.0 + pair.eta());
}

double inconclusive_weight(double eta) { return 2.0 * eta / (1.0 + eta); }

Scenario parse_scenario(std::string_view name) {
  if (name == "inconclusive") return Scenario::inconclusive;
  if (name == "matched") return Scenario::matched;
  if (name == "mismatched") return Scenario::mismatched;
  throw std::invalid_argument("unknown scenario '" + std::string(name) + "'");
}

std::string_view scenario_name(Scenario s) {
  switch (s) {
    case Scenario::inconclusive: return "inconclusive";
    case Scenario::matched: return "matched";
    case Scenario::mismatched: return "mismatched";
  }
  return "?";
}

ScenarioBound bound_inconclusive(double eta) {
  require_closed_unit(eta, "bound_inconclusive");
  return {0.5 * (1.0 + std::sqrt(1.0 + 2.0 * eta + 5.0 * eta * eta) / (1.0 + 3.0 * eta)), at_endpoint(eta)};
}

ScenarioBound bound_matched(double eta) {
  require_closed_unit(eta, "bound_matched");
  return {matched_family(eta, helstrom_success(eta)), at_endpoint(eta)};
}

ScenarioBound bound_mismatched(double eta) {
  require_closed_unit(eta, "bound_mismatched");
  return {matched_family(eta, 1.0 - helstrom_success(eta)), at_endpoint(eta)};
}

ScenarioBound scenario_bound(Scenario s, double eta) {
  switch (s) {
    case Scenario::inconclusive: return bound_inconclusive(eta);
    case Scenario::matched: return bound_matched(eta);
    case Scenario::mismatched: return bound_mismatched(eta);
  }
  throw std::invalid_argument("scenario_bound: bad scenario");
}

ComplexMatrix printed_matrix(Scenario s, const DiscriminationPair& pair, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("printed_matrix: sign must be +1 or -1");
  const double eta = pair.eta();
  const double sg = static_cast<double>(sign);
  if (s == Scenario::inconclusive) {
    const double a = inconclusive_weight(eta);
    return ComplexMatrix{{0.5 * (1.0 + 2.0 * a), 0.5 * sg}, {0.5 * sg, 0.5}};
  }
  const double sin2 = std::sin(2.0 * pair.theta());
  const double off = s == Scenario::matched ? 1.0 + eta + sin2 : 1.0 + eta - sin2;
  const double k = 1.0 / (2.0 * (1.0 + eta));
  return ComplexMatrix{{2.0 * k, sg * off * k}, {sg * off * k, 2.0 * (1.0 + eta) * k}};
}

BoundResult exact_scenario_bound(Scenario s, const DiscriminationPair& pair, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("exact_scenario_bound: sign must be +1 or -1");
  const std::vector<MeasurementSet> sets = {helstrom_povm(), b92_povm(pair)};
  const std::size_t helstrom = sign == 1 ? 0 : 1;
  std::size_t b92 = 2;
  if (s == Scenario::matched) b92 = helstrom;
  if (s == Scenario::mismatched) b92 = 1 - helstrom;
  return exact_fg_bound(sets, OutcomeSelection{{helstrom, b92}, {}});
}

std::vector<ScenarioRow> scenario_sweep(Scenario s, std::span<const double> etas) {
  std::vector<ScenarioRow> rows;
  rows.reserve(etas.size());
  for (double eta : etas) {
    const auto pair = DiscriminationPair::limit(eta);
    ScenarioRow row;
    row.eta = eta;
    row.closed_form = scenario_bound(s, eta).value;
    row.exact = exact_scenario_bound(s, pair, 1).value;
    const double other = exact_scenario_bound(s, pair, -1).value;
    row.residual = std::max(std::abs(row.closed_form - row.exact), std::abs(row.closed_form - other));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fgu
