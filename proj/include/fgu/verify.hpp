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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fgu/bounds.hpp"
#include "fgu/discrimination.hpp"
#include "fgu/measurements.hpp"
#include "fgu/report.hpp"

namespace fgu {

inline constexpr double kSlackTol = 1e-10;
inline constexpr double kSaturationTol = 1e-10;

/// Brute-force maximum of the normalized weighted probability sum over Haar
/// pure states drawn from seeds seed, seed+1, ..., seed+samples-1.
double sampling_oracle(std::span<const MeasurementSet> sets, const OutcomeSelection& sel, std::uint64_t samples,
                       std::uint64_t seed, Normalization norm = Normalization::per_element_norm);

struct OracleEstimate {
  double sampled = 0.0;
  /// Rayleigh quotient after power iteration from the sampled argmax.
  double refined = 0.0;
  std::uint64_t argmax_seed = 0;
};

OracleEstimate sampling_oracle_refined(std::span<const MeasurementSet> sets, const OutcomeSelection& sel,
                                       std::uint64_t samples, std::uint64_t seed,
                                       Normalization norm = Normalization::per_element_norm, int power_iterations = 20);

/// <v|A|v> for the unit vector reached by `iterations` power steps on the
/// positive operator A.
double power_refine(const ComplexMatrix& op, ComplexVector start, int iterations = 20);

/// Checks that result.maximizer attains result.value, and that the
/// optional closed-form state does too. Throws if no maximizer is attached.
VerificationReport saturation_check(const BoundResult& result, std::optional<ComplexVector> expected_state = {});

struct TripletCensus {
  std::vector<TripletClassification> cases;
  std::size_t singular = 0;
  std::size_t regular = 0;
  VerificationReport report;
};

/// Every choice of three quartet bases and one vector from each (108 cases),
/// visiting bases in `base_order`.
TripletCensus enumerate_d3_triplets(std::array<std::size_t, 4> base_order = {0, 1, 2, 3});

enum class Proposition { mub = 1, mum = 2, mbb = 3 };

struct SweepOptions {
  /// Enumerate every case when a (d, N) block has at most this many.
  std::size_t max_exhaustive = 10000;
  /// Cases drawn per block otherwise.
  std::size_t random_cases = 10000;
  std::uint64_t seed = 1;
  /// Depolarizing weights for the unbiased-measurement sweep.
  std::vector<double> s_grid = {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  bool parallel = true;
};

struct PropositionRow {
  std::size_t d = 0;
  std::size_t n = 0;
  double s = 1.0;
  double kappa = 1.0;
  std::size_t cases = 0;
  bool exhaustive = true;
  double max_exact = 0.0;
  double closed_form = 0.0;
  /// closed_form - max_exact
  double worst_slack = 0.0;
};

struct PropositionSweep {
  std::vector<PropositionRow> rows;
  VerificationReport report;
  double worst_slack = 0.0;
};

/// Confirms exact <= closed form + kSlackTol over selections.
///   mub: every N-subset of mub_family_prime(d), N = 1..d+1, every outcome string.
///   mum: the same over mum_from_mubs(., s) for each s, averaged with 1/N.
///   mbb: every permutation selection over mbb_family(d).
/// Throws std::invalid_argument for dimensions the family does not support.
PropositionSweep proposition_sweep(Proposition prop, std::span<const std::size_t> dims,
                                   const SweepOptions& options = {});

/// Closed form against exact spectral bound on an eta grid, endpoints,
/// monotonicity, and POVM validity for the discrimination scenarios.
VerificationReport verify_discrimination(std::span<const double> etas);

/// Equal-overlap triple spectra and saturation, plus the d = 3 saturating
/// state (1, 0, 1)/sqrt 2.
VerificationReport verify_triples(std::span<const double> etas);

/// Oracle agreement on seeded random projective MUB selections.
VerificationReport verify_oracle(std::span<const std::size_t> dims, std::size_t selections, std::uint64_t samples,
                                 std::uint64_t seed);

enum class Suite { props, discrimination, d3_census, all };
Suite parse_suite(std::string_view name);

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::uint64_t samples = 10000;
};

VerificationReport run_suite(Suite suite, const SuiteOptions& options);

/// n evenly spaced points from start to stop inclusive.
std::vector<double> linspace(double start, double stop, std::size_t n);

}  // namespace fgu
