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

#include <optional>
#include <string>
#include <vector>

namespace fgu {

struct Check {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

/// Pass/fail record for a batch of invariant checks. Validators fill one of
/// these instead of throwing.
struct VerificationReport {
  std::vector<Check> checks;
  /// Efficiency parameter fitted by validate_mum.
  std::optional<double> kappa;

  /// Records `residual` against `tolerance`; passes iff residual <= tolerance.
  void add(std::string name, double residual, double tolerance);
  /// Records a check whose pass condition is not a plain residual bound.
  void add(std::string name, bool passed, double residual, double tolerance);
  void merge(const VerificationReport& other, const std::string& prefix = {});

  bool passed() const;
  double max_residual() const;
  const Check* find(const std::string& name) const;
};

}  // namespace fgu
