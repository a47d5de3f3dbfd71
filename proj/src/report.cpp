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

#include "fgu/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fgu {

void VerificationReport::add(std::string name, double residual, double tolerance) {
  const bool ok = std::isfinite(residual) && residual <= tolerance;
  checks.push_back({std::move(name), ok, residual, tolerance});
}

void VerificationReport::add(std::string name, bool passed, double residual, double tolerance) {
  checks.push_back({std::move(name), passed && std::isfinite(residual), residual, tolerance});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.residual, c.tolerance});
  if (other.kappa && !kappa) kappa = other.kappa;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

double VerificationReport::max_residual() const {
  double r = 0.0;
  for (const auto& c : checks) r = std::max(r, c.residual);
  return r;
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace fgu
