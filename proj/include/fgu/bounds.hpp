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
#include <optional>
#include <span>
#include <vector>

#include "fgu/linalg.hpp"
#include "fgu/measurements.hpp"

namespace fgu {

/// One chosen outcome j(t) per measurement t, with nonnegative weights.
/// Empty `weights` means all weights are 1.
struct OutcomeSelection {
  std::vector<std::size_t> outcomes;
  std::vector<double> weights;

  double weight(std::size_t t) const { return weights.empty() ? 1.0 : weights[t]; }
  bool equal_weights() const;
  double weight_sum() const;
};

/// How the weighted probability sum is normalized.
///   per_element_norm: S = sum_t w_t ||M_j(t)||_inf, with ||P|| = 1 taken
///                     exactly for projective sets.
///   weight_sum:       S = sum_t w_t, the 1/N average used by the closed-form
///                     propositions.
enum class Normalization { per_element_norm, weight_sum };

struct BoundResult {
  /// max over states of sum_t w_t p_j(t) / S.
  double value = 0.0;
  /// T / S with T = sum_t w_t M_j(t); value is its spectral norm.
  ComplexMatrix op;
  std::optional<DensityMatrix> maximizer;
  ComplexVector maximizer_vector;
  double normalizer = 0.0;
  /// Unequal weights on general POVMs: S = sum w_t ||M||_inf is a natural
  /// extension rather than an established convention.
  bool extension = false;
};

/// Throws std::invalid_argument if the selection does not fit `sets`.
void validate_selection(std::span<const MeasurementSet> sets, const OutcomeSelection& sel);

/// S for the selected elements under `norm`.
double selection_normalizer(std::span<const MeasurementSet> sets, const OutcomeSelection& sel,
                            Normalization norm = Normalization::per_element_norm);

/// T / S for the selected elements.
ComplexMatrix averaged_operator(std::span<const MeasurementSet> sets, const OutcomeSelection& sel,
                                Normalization norm = Normalization::per_element_norm);

/// Value of exact_fg_bound without the maximizer.
double exact_fg_value(std::span<const MeasurementSet> sets, const OutcomeSelection& sel,
                      Normalization norm = Normalization::per_element_norm);

/// Exact fine-grained bound: the top eigenvalue of T / S and its eigenvector.
BoundResult exact_fg_bound(std::span<const MeasurementSet> sets, const OutcomeSelection& sel,
                           Normalization norm = Normalization::per_element_norm);

/// (1/d)(1 + (d-1)/sqrt(N)) for N unbiased bases.
double mub_closed_bound(std::size_t d, std::size_t n);
/// sqrt(purity) sqrt((N + d - 1)/(N d)).
double mub_purity_bound(std::size_t d, std::size_t n, double purity);
/// (1/d)(1 + sqrt((d-1)(kappa d - 1)/N)), kappa in (1/d, 1].
double mum_closed_bound(std::size_t d, std::size_t n, double kappa);
/// sqrt(purity) sqrt((N + kappa d - 1)/(N d)).
double mum_purity_bound(std::size_t d, std::size_t n, double kappa, double purity);
/// (1/d)(1 + sqrt(2 - 2/d)) for a permutation selection over the d MBBs.
double mbb_closed_bound(std::size_t d);

/// Relative excess of the pure-state purity bound over the spectral bound
/// for N = d + 1 unbiased bases.
double purity_bound_relative_excess(std::size_t d);

/// True iff `sel` is unweighted and its outcomes are a permutation of 0..d-1.
bool is_permutation_selection(const OutcomeSelection& sel, std::size_t d);

/// Three unit vectors with equal real pairwise overlap eta, in the frame
/// where c3 = e3 and c1, c2 are mirror images.
struct EqualOverlapTriple {
  double eta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  std::array<ComplexVector, 3> vectors;
  /// Ascending eigenvalues of c1c1* + c2c2* + c3c3*.
  std::array<double, 3> spectrum{};
  BoundResult bound;
  /// The closed-form saturating state.
  ComplexVector saturating_state;
  /// max_j | |<c_j|psi>|^2 - bound |
  double overlap_residual = 0.0;
};

/// Throws std::invalid_argument unless 0 <= eta < 1.
EqualOverlapTriple triple_equal_overlap(double eta);

/// (lambda - 2 beta^2)(lambda^2 - (2 + eta) lambda + 2 alpha^2)
double triple_characteristic(double eta, double lambda);

/// Position of a vector inside mub_d3_quartet().
struct QuartetPick {
  std::size_t basis = 0;
  std::size_t vector = 0;
};

enum class TripletClass { singular, regular };

struct TripletClassification {
  std::array<QuartetPick, 3> picks{};
  double determinant = 0.0;
  double trace = 0.0;
  double minor_sum = 0.0;
  /// Numerically computed max eigenvalue / 3.
  double bound = 0.0;
  /// 2/3 for determinant 0, (1/3)(1 + (2/sqrt 3) cos(pi/18)) for 1/3.
  double closed_form = 0.0;
  TripletClass cls = TripletClass::singular;
  ComplexMatrix projector_sum;
};

inline constexpr double kTripletSingularBound = 2.0 / 3.0;
double triplet_regular_bound();

/// Throws std::invalid_argument unless the picks name three distinct bases.
TripletClassification classify_triplet_d3(const std::array<QuartetPick, 3>& picks);
/// Locates each vector in the quartet (up to phase) and classifies.
TripletClassification classify_triplet_d3(const std::array<ComplexVector, 3>& vectors);

/// det of a 3x3 Hermitian matrix (real part) and its principal 2x2 minor sum.
double determinant3(const ComplexMatrix& m);
double principal_minor_sum3(const ComplexMatrix& m);

}  // namespace fgu
