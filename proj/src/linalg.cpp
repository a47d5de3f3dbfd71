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

#include "fgu/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fgu {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTol = 1e-13;

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// Zeroes a(p,q) with the unitary U = diag(u,1) R on the (p,q) plane, where
// u carries the phase of a(p,q) and R is the real Jacobi rotation of the
// resulting symmetric block. A <- U^dagger A U, V <- V U.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const Complex u = apq / g;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * g);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const std::size_t n = a.dim();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = u * c * akp - s * akq;
    a(k, q) = u * s * akp + c * akq;
  }
  const Complex ub = std::conj(u);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = ub * c * apk - s * aqk;
    a(q, k) = ub * s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = u * c * vkp - s * vkq;
    v(k, q) = u * s * vkp + c * vkq;
  }
}

void gram_schmidt(std::vector<ComplexVector>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Complex proj = inner(vs[j], vs[i]);
      for (std::size_t k = 0; k < vs[i].size(); ++k) vs[i][k] -= proj * vs[j][k];
    }
    vs[i] = normalized(std::move(vs[i]));
  }
}

void fix_phase(ComplexVector& v) {
  std::size_t best = 0;
  double best_abs = -1.0;
  // Ties within rounding resolve to the lowest index.
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double m = std::abs(v[k]);
    if (m > best_abs * (1.0 + 1e-12) + 1e-300) {
      best_abs = m;
      best = k;
    }
  }
  if (best_abs <= 0.0) return;
  const Complex phase = std::conj(v[best]) / best_abs;
  for (auto& x : v) x *= phase;
  v[best] = best_abs;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw std::invalid_argument("ComplexMatrix: dimension must be at least 1");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (dim == 0) throw std::invalid_argument("ComplexMatrix: dimension must be at least 1");
  if (data_.size() != dim * dim) throw std::invalid_argument("ComplexMatrix: expected dim*dim entries");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  if (dim_ == 0) throw std::invalid_argument("ComplexMatrix: dimension must be at least 1");
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("ComplexMatrix: matrix must be square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
  ComplexMatrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::hermitian_residual() const {
  double r = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      r = std::max(r, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return r;
}

double ComplexMatrix::max_abs() const {
  double r = 0.0;
  for (const auto& x : data_) r = std::max(r, std::abs(x));
  return r;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : data_) s += std::norm(x);
  return std::sqrt(s);
}

ComplexVector ComplexMatrix::apply(std::span<const Complex> v) const {
  if (v.size() != dim_) throw std::invalid_argument("ComplexMatrix::apply: dimension mismatch");
  ComplexVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Complex ComplexMatrix::expectation(std::span<const Complex> v) const {
  const auto av = apply(v);
  return inner(v, av);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "matrix addition");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "matrix subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& x : data_) x *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matrix product");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: dimension mismatch");
  Complex s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

ComplexVector normalized(ComplexVector v) {
  const double n = norm(v);
  if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
  for (auto& x : v) x /= n;
  return v;
}

ComplexVector EigenDecomposition::eigenvector(std::size_t k) const {
  ComplexVector v(eigenvectors.dim());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = eigenvectors(i, k);
  return v;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "hs_inner");
  Complex s = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t k = 0; k < da.size(); ++k) s += std::conj(da[k]) * db[k];
  return s;
}

double schatten_norm(const ComplexMatrix& a, double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("schatten_norm: q must be >= 1");
  // Singular values are square roots of the eigenvalues of A^dagger A; for
  // Hermitian input they are |eigenvalues|, which avoids squaring.
  std::vector<double> sv;
  if (a.hermitian_residual() <= tol::hermitian * std::max(1.0, a.max_abs())) {
    for (double l : hermitian_eig(a).eigenvalues) sv.push_back(std::abs(l));
  } else {
    for (double l : hermitian_eig(a.adjoint() * a).eigenvalues) sv.push_back(std::sqrt(std::max(l, 0.0)));
  }
  if (std::isinf(q)) return *std::max_element(sv.begin(), sv.end());
  const double top = *std::max_element(sv.begin(), sv.end());
  if (top == 0.0) return 0.0;
  double s = 0.0;
  for (double x : sv) s += std::pow(x / top, q);
  return top * std::pow(s, 1.0 / q);
}

EigenDecomposition hermitian_eig(const ComplexMatrix& input) {
  const std::size_t n = input.dim();
  const double scale = std::max(1.0, input.max_abs());
  if (input.hermitian_residual() > tol::hermitian * scale) {
    throw std::domain_error("hermitian_eig: matrix is not Hermitian (residual " +
                            std::to_string(input.hermitian_residual()) + ")");
  }
  // Symmetrize so that rounding in the input cannot bias the rotations.
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = input(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = kOffDiagonalTol * a.frobenius_norm();

  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweep == kMaxSweeps) {
      throw std::runtime_error("hermitian_eig: no convergence after " + std::to_string(kMaxSweeps) +
                               " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
    ++sweep;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.sweeps = sweep;
  out.eigenvalues.resize(n);
  std::vector<ComplexVector> vectors(n, ComplexVector(n));
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) vectors[k][i] = v(i, order[k]);
  }

  const double cluster_gap = tol::eig * std::max(1.0, input.frobenius_norm());
  for (std::size_t begin = 0; begin < n;) {
    std::size_t end = begin + 1;
    while (end < n && out.eigenvalues[end] - out.eigenvalues[end - 1] <= cluster_gap) ++end;
    if (end - begin > 1) {
      std::vector<ComplexVector> cluster(vectors.begin() + begin, vectors.begin() + end);
      gram_schmidt(cluster);
      std::move(cluster.begin(), cluster.end(), vectors.begin() + begin);
    }
    begin = end;
  }

  out.eigenvectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    fix_phase(vectors[k]);
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = vectors[k][i];
  }
  return out;
}

double spectral_norm_psd(const ComplexMatrix& a) {
  const auto eig = hermitian_eig(a);
  const double scale = std::max(1.0, std::abs(eig.max_eigenvalue()));
  if (eig.min_eigenvalue() < -tol::psd * scale) {
    throw std::domain_error("spectral_norm_psd: matrix is indefinite (min eigenvalue " +
                            std::to_string(eig.min_eigenvalue()) + ")");
  }
  return eig.max_eigenvalue();
}

double max_norm_bound(std::span<const double> w) {
  if (w.empty()) throw std::invalid_argument("max_norm_bound: empty vector");
  const double d = static_cast<double>(w.size());
  double l1 = 0.0;
  double l2sq = 0.0;
  for (double x : w) {
    l1 += std::abs(x);
    l2sq += x * x;
  }
  double radicand = d * l2sq - l1 * l1;
  if (radicand < 0.0) {
    if (radicand < -tol::radicand * std::max(1.0, l1 * l1)) {
      throw std::domain_error("max_norm_bound: negative radicand " + std::to_string(radicand));
    }
    radicand = 0.0;
  }
  return (l1 + std::sqrt(d - 1.0) * std::sqrt(radicand)) / d;
}

}  // namespace fgu
