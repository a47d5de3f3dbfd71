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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fgu/linalg.hpp"
#include "fgu/report.hpp"

namespace fgu {

namespace tol {
inline constexpr double completeness = 1e-10;
inline constexpr double basis = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double probability = 1e-10;
inline constexpr double mum = 1e-10;
}  // namespace tol

enum class MeasurementKind { projective, general };

/// A POVM: positive elements that sum to the identity. Construction does not
/// validate; use validate_povm.
struct MeasurementSet {
  std::size_t dim = 0;
  MeasurementKind kind = MeasurementKind::general;
  std::vector<ComplexMatrix> elements;

  std::size_t size() const { return elements.size(); }
};

/// Orthonormal basis of C^dim. The constructor checks the Gram matrix against
/// tol::basis.
class OrthonormalBasis {
 public:
  explicit OrthonormalBasis(std::vector<ComplexVector> vectors);

  std::size_t dim() const { return vectors_.size(); }
  const ComplexVector& operator[](std::size_t j) const { return vectors_[j]; }
  const std::vector<ComplexVector>& vectors() const { return vectors_; }

  ComplexMatrix projector(std::size_t j) const { return ComplexMatrix::outer(vectors_[j]); }
  /// Rank-one projectors as a projective measurement, in vector order.
  MeasurementSet measurement() const;
  /// max |<b_j|b_k> - delta_jk|
  double gram_residual() const;

 private:
  std::vector<ComplexVector> vectors_;
};

/// Unit-trace positive semidefinite operator. The constructor validates.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix);
  static DensityMatrix pure(std::span<const Complex> psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return matrix_.dim(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  double purity() const;

 private:
  ComplexMatrix matrix_;
};

/// tr(M rho) clamped to [0, 1]. Throws std::domain_error if the raw value
/// falls outside [-tol::probability, 1 + tol::probability].
double outcome_probability(const ComplexMatrix& element, const DensityMatrix& state);

VerificationReport validate_povm(const MeasurementSet& set, double tolerance);

/// Checks |<b_j|c_k>| = 1/sqrt(d) for every pair of vectors.
VerificationReport check_mub_pair(const OrthonormalBasis& b1, const OrthonormalBasis& b2, double tolerance);

/// Column x has entries exp(i x y 2 pi / d) / sqrt(d).
OrthonormalBasis fourier_basis(std::size_t d);
OrthonormalBasis standard_basis(std::size_t d);

/// The four unbiased bases of C^3: eigenbases of Z, X, ZX and ZX^2 with the
/// vectors of each basis ordered by eigenvalue 1, w, w*.
std::vector<OrthonormalBasis> mub_d3_quartet();

bool is_prime(std::size_t n);

/// d+1 unbiased bases for prime d: standard, Fourier, then the eigenbases of
/// Z X^t for t = 1..d-1, ordered by eigenvalue argument in [0, 2 pi) with the
/// first component of each vector real and positive.
std::vector<OrthonormalBasis> mub_family_prime(std::size_t d);

/// The d mutually biased bases |a_x^(t)> = F|x> + ((e^{i t phi} - 1)/sqrt(d))|0>.
std::vector<OrthonormalBasis> mbb_family(std::size_t d);

/// Checks <a_x^(s)|a_y^(t)> = delta_xy + (e^{i(t-s)phi} - 1)/d for all s, t, x, y.
VerificationReport validate_mbb(const std::vector<OrthonormalBasis>& bases, double tolerance);

struct MumFamily {
  std::vector<MeasurementSet> sets;
  double kappa = 1.0;
};

/// Depolarized projectors s|b><b| + (1-s) I/d; kappa = s^2 + (1 - s^2)/d.
MumFamily mum_from_mubs(const std::vector<OrthonormalBasis>& bases, double s);

/// Checks unit traces, cross overlaps 1/d, within-set overlaps against a
/// single fitted kappa, and 1/d < kappa <= 1. The fit lands in report.kappa.
VerificationReport validate_mum(const std::vector<MeasurementSet>& sets, double tolerance);

/// Haar-distributed unit vector: normalized complex Gaussian drawn from
/// CounterRng(seed).
ComplexVector haar_random_vector(std::size_t dim, std::uint64_t seed);
DensityMatrix haar_random_pure(std::size_t dim, std::uint64_t seed);

}  // namespace fgu
