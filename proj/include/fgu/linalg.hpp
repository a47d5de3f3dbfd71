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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fgu {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

namespace tol {
inline constexpr double hermitian = 1e-10;
inline constexpr double psd = 1e-10;
inline constexpr double eig = 1e-9;
inline constexpr double radicand = 1e-12;
}  // namespace tol

/// Dense square complex matrix stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> row_major);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |v><v|
  static ComplexMatrix outer(std::span<const Complex> v);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  std::span<const Complex> data() const { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  /// max |A(i,j) - conj(A(j,i))|
  double hermitian_residual() const;
  double max_abs() const;
  double frobenius_norm() const;
  ComplexVector apply(std::span<const Complex> v) const;
  /// <v|A|v>
  Complex expectation(std::span<const Complex> v) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// <a|b>, antilinear in the first argument.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);
ComplexVector normalized(ComplexVector v);

/// Spectral decomposition of a Hermitian matrix. Eigenvalues ascend and
/// eigenvector k is column k of `eigenvectors`.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
  int sweeps = 0;

  ComplexVector eigenvector(std::size_t k) const;
  double max_eigenvalue() const { return eigenvalues.back(); }
  double min_eigenvalue() const { return eigenvalues.front(); }
};

/// Hilbert-Schmidt product tr(A^dagger B).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Schatten q-norm; pass std::numeric_limits<double>::infinity() for the
/// spectral norm.
double schatten_norm(const ComplexMatrix& a, double q);

/// Cyclic complex Jacobi. Output is deterministic: clusters of degenerate
/// eigenvalues are re-orthonormalized in index order, and the
/// largest-magnitude component of every eigenvector is made real and
/// nonnegative.
EigenDecomposition hermitian_eig(const ComplexMatrix& a);

/// Largest eigenvalue of a positive semidefinite matrix.
double spectral_norm_psd(const ComplexMatrix& a);

/// Upper bound on max_i |w_i| from the 1- and 2-norms of w:
///   (|w|_1 + sqrt(d-1) sqrt(d |w|_2^2 - |w|_1^2)) / d
double max_norm_bound(std::span<const double> w);

}  // namespace fgu
