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

#include "fgu/measurements.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fgu/rng.hpp"

namespace fgu {

namespace {

Complex root_of_unity(double turns) {
  const double angle = 2.0 * std::numbers::pi * turns;
  return {std::cos(angle), std::sin(angle)};
}

std::string indexed(const char* name, std::size_t j) { return std::string(name) + "[" + std::to_string(j) + "]"; }

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

// Eigenbasis of Z X^t with X|j> = |j+1>, Z|j> = w^j |j>. An eigenvector with
// eigenvalue lambda obeys v[m] = w^m v[m-t] / lambda, walked along m = k t.
OrthonormalBasis zx_eigenbasis(std::size_t d, std::size_t t) {
  const double dd = static_cast<double>(d);
  // lambda^d = prod_k w^{k t} = exp(i pi t (d+1)); base root lambda_0.
  const double base_turns = 0.5 * static_cast<double>(t) * (dd + 1.0) / dd;
  std::vector<double> turns(d);
  for (std::size_t k = 0; k < d; ++k) {
    double x = std::fmod(base_turns + static_cast<double>(k) / dd, 1.0);
    if (x > 1.0 - 1e-12) x = 0.0;
    turns[k] = x;
  }
  std::sort(turns.begin(), turns.end());

  std::vector<ComplexVector> vectors;
  vectors.reserve(d);
  for (double lt : turns) {
    const Complex lambda = root_of_unity(lt);
    ComplexVector v(d);
    v[0] = 1.0 / std::sqrt(dd);
    std::size_t prev = 0;
    for (std::size_t k = 1; k < d; ++k) {
      const std::size_t m = (k * t) % d;
      v[m] = root_of_unity(static_cast<double>(m) / dd) * v[prev] / lambda;
      prev = m;
    }
    vectors.push_back(std::move(v));
  }
  return OrthonormalBasis(std::move(vectors));
}

}  // namespace

OrthonormalBasis::OrthonormalBasis(std::vector<ComplexVector> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw std::invalid_argument("OrthonormalBasis: no vectors");
  for (const auto& v : vectors_) {
    if (v.size() != vectors_.size()) {
      throw std::invalid_argument("OrthonormalBasis: expected " + std::to_string(vectors_.size()) +
                                  " vectors of that length");
    }
  }
  const double r = gram_residual();
  if (!(r <= tol::basis)) {
    throw std::invalid_argument("OrthonormalBasis: Gram residual " + std::to_string(r) + " exceeds tolerance");
  }
}

MeasurementSet OrthonormalBasis::measurement() const {
  MeasurementSet set{dim(), MeasurementKind::projective, {}};
  for (std::size_t j = 0; j < dim(); ++j) set.elements.push_back(projector(j));
  return set;
}

double OrthonormalBasis::gram_residual() const {
  double r = 0.0;
  for (std::size_t j = 0; j < vectors_.size(); ++j) {
    for (std::size_t k = j; k < vectors_.size(); ++k) {
      const Complex g = inner(vectors_[j], vectors_[k]);
      r = std::max(r, std::abs(g - (j == k ? 1.0 : 0.0)));
    }
  }
  return r;
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.hermitian_residual() > tol::hermitian) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  if (std::abs(matrix_.trace() - 1.0) > tol::trace) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1");
  }
  if (hermitian_eig(matrix_).min_eigenvalue() < -tol::psd) {
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> psi) {
  return DensityMatrix(ComplexMatrix::outer(normalized(ComplexVector(psi.begin(), psi.end()))));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(ComplexMatrix::identity(dim) * Complex(1.0 / static_cast<double>(dim)));
}

double DensityMatrix::purity() const { return hs_inner(matrix_, matrix_).real(); }

double outcome_probability(const ComplexMatrix& element, const DensityMatrix& state) {
  if (element.dim() != state.dim()) throw std::invalid_argument("outcome_probability: dimension mismatch");
  // tr(M rho) = <M^dagger, rho>_hs and M is Hermitian.
  const double p = hs_inner(element, state.matrix()).real();
  if (p < -tol::probability || p > 1.0 + tol::probability) {
    throw std::domain_error("outcome_probability: value " + std::to_string(p) +
                            " outside [0, 1]; element is not a POVM element");
  }
  return std::clamp(p, 0.0, 1.0);
}

VerificationReport validate_povm(const MeasurementSet& set, double tolerance) {
  VerificationReport report;
  if (set.dim == 0) {
    report.add("dim", false, 1.0, tolerance);
    return report;
  }
  bool shapes_ok = true;
  for (std::size_t j = 0; j < set.size(); ++j) {
    if (set.elements[j].dim() != set.dim) {
      report.add(indexed("element_dim", j), false, 1.0, tolerance);
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return report;

  ComplexMatrix total(set.dim);
  for (std::size_t j = 0; j < set.size(); ++j) {
    const auto& m = set.elements[j];
    total += m;
    report.add(indexed("hermitian", j), m.hermitian_residual(), tolerance);
    const double lmin = hermitian_eig(hermitian_part(m)).min_eigenvalue();
    report.add(indexed("positivity", j), std::max(0.0, -lmin), tolerance);
    if (set.kind == MeasurementKind::projective) {
      const double idem = (m * m - m).max_abs();
      const double tr = std::abs(m.trace() - 1.0);
      report.add(indexed("rank_one_projector", j), std::max(idem, tr), tolerance);
    }
  }
  const ComplexMatrix defect = hermitian_part(total - ComplexMatrix::identity(set.dim));
  report.add("completeness", schatten_norm(defect, std::numeric_limits<double>::infinity()), tolerance);
  return report;
}

VerificationReport check_mub_pair(const OrthonormalBasis& b1, const OrthonormalBasis& b2, double tolerance) {
  if (b1.dim() != b2.dim()) throw std::invalid_argument("check_mub_pair: dimension mismatch");
  const double target = 1.0 / std::sqrt(static_cast<double>(b1.dim()));
  double r = 0.0;
  for (const auto& u : b1.vectors()) {
    for (const auto& v : b2.vectors()) r = std::max(r, std::abs(std::abs(inner(u, v)) - target));
  }
  VerificationReport report;
  report.add("unbiased_overlap", r, tolerance);
  return report;
}

OrthonormalBasis standard_basis(std::size_t d) {
  if (d < 1) throw std::invalid_argument("standard_basis: d must be >= 1");
  std::vector<ComplexVector> vs(d, ComplexVector(d));
  for (std::size_t j = 0; j < d; ++j) vs[j][j] = 1.0;
  return OrthonormalBasis(std::move(vs));
}

OrthonormalBasis fourier_basis(std::size_t d) {
  if (d < 2) throw std::invalid_argument("fourier_basis: d must be >= 2");
  const double dd = static_cast<double>(d);
  std::vector<ComplexVector> vs(d, ComplexVector(d));
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      vs[x][y] = root_of_unity(static_cast<double>((x * y) % d) / dd) / std::sqrt(dd);
    }
  }
  return OrthonormalBasis(std::move(vs));
}

std::vector<OrthonormalBasis> mub_d3_quartet() {
  const Complex w = root_of_unity(1.0 / 3.0);
  const Complex wc = std::conj(w);
  const double r = 1.0 / std::sqrt(3.0);
  auto vec = [r](Complex a, Complex b, Complex c) { return ComplexVector{a * r, b * r, c * r}; };
  return {
      OrthonormalBasis({{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}),
      OrthonormalBasis({vec(1.0, 1.0, 1.0), vec(1.0, wc, w), vec(1.0, w, wc)}),
      OrthonormalBasis({vec(1.0, w, 1.0), vec(1.0, 1.0, w), vec(w, 1.0, 1.0)}),
      OrthonormalBasis({vec(1.0, 1.0, wc), vec(wc, 1.0, 1.0), vec(1.0, wc, 1.0)}),
  };
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

std::vector<OrthonormalBasis> mub_family_prime(std::size_t d) {
  if (!is_prime(d)) throw std::invalid_argument("mub_family_prime: d = " + std::to_string(d) + " is not prime");
  std::vector<OrthonormalBasis> family;
  family.reserve(d + 1);
  family.push_back(standard_basis(d));
  family.push_back(fourier_basis(d));
  for (std::size_t t = 1; t < d; ++t) family.push_back(zx_eigenbasis(d, t));
  return family;
}

std::vector<OrthonormalBasis> mbb_family(std::size_t d) {
  if (d < 2) throw std::invalid_argument("mbb_family: d must be >= 2");
  const double dd = static_cast<double>(d);
  const auto fourier = fourier_basis(d);
  std::vector<OrthonormalBasis> family;
  family.reserve(d);
  for (std::size_t t = 0; t < d; ++t) {
    const Complex shift = (root_of_unity(static_cast<double>(t) / dd) - 1.0) / std::sqrt(dd);
    std::vector<ComplexVector> vs = fourier.vectors();
    for (auto& v : vs) v[0] += shift;
    family.emplace_back(std::move(vs));
  }
  return family;
}

VerificationReport validate_mbb(const std::vector<OrthonormalBasis>& bases, double tolerance) {
  VerificationReport report;
  if (bases.empty()) {
    report.add("count", false, 1.0, tolerance);
    return report;
  }
  const std::size_t d = bases.front().dim();
  const double dd = static_cast<double>(d);
  double r = 0.0;
  for (std::size_t s = 0; s < bases.size(); ++s) {
    for (std::size_t t = 0; t < bases.size(); ++t) {
      const Complex shift =
          (root_of_unity((static_cast<double>(t) - static_cast<double>(s)) / dd) - 1.0) / dd;
      for (std::size_t x = 0; x < d; ++x) {
        for (std::size_t y = 0; y < d; ++y) {
          const Complex expected = (x == y ? 1.0 : 0.0) + shift;
          r = std::max(r, std::abs(inner(bases[s][x], bases[t][y]) - expected));
        }
      }
    }
  }
  report.add("mbb_inner_products", r, tolerance);
  for (std::size_t t = 0; t < bases.size(); ++t) {
    report.merge(validate_povm(bases[t].measurement(), tolerance), "basis[" + std::to_string(t) + "].");
  }
  return report;
}

MumFamily mum_from_mubs(const std::vector<OrthonormalBasis>& bases, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("mum_from_mubs: s must lie in (0, 1]");
  if (bases.empty()) throw std::invalid_argument("mum_from_mubs: no bases");
  const std::size_t d = bases.front().dim();
  for (std::size_t a = 0; a < bases.size(); ++a) {
    for (std::size_t b = a + 1; b < bases.size(); ++b) {
      if (!check_mub_pair(bases[a], bases[b], tol::basis).passed()) {
        throw std::invalid_argument("mum_from_mubs: bases " + std::to_string(a) + " and " + std::to_string(b) +
                                    " are not mutually unbiased");
      }
    }
  }
  const double dd = static_cast<double>(d);
  const ComplexMatrix noise = ComplexMatrix::identity(d) * Complex((1.0 - s) / dd);
  MumFamily family;
  family.kappa = s * s + (1.0 - s * s) / dd;
  for (const auto& basis : bases) {
    MeasurementSet set{d, s == 1.0 ? MeasurementKind::projective : MeasurementKind::general, {}};
    for (std::size_t j = 0; j < d; ++j) set.elements.push_back(basis.projector(j) * Complex(s) + noise);
    family.sets.push_back(std::move(set));
  }
  return family;
}

VerificationReport validate_mum(const std::vector<MeasurementSet>& sets, double tolerance) {
  VerificationReport report;
  if (sets.empty()) {
    report.add("structure", false, 1.0, tolerance);
    return report;
  }
  const std::size_t d = sets.front().dim;
  for (std::size_t t = 0; t < sets.size(); ++t) {
    bool ok = sets[t].dim == d && sets[t].size() == d;
    for (const auto& m : sets[t].elements) ok = ok && m.dim() == d;
    if (!ok) {
      report.add(indexed("structure", t), false, 1.0, tolerance);
      return report;
    }
  }
  const double dd = static_cast<double>(d);

  double kappa = 0.0;
  double trace_r = 0.0;
  for (const auto& set : sets) {
    for (const auto& m : set.elements) {
      trace_r = std::max(trace_r, std::abs(m.trace() - 1.0));
      kappa += hs_inner(m, m).real();
    }
  }
  kappa /= static_cast<double>(sets.size() * d);
  report.kappa = kappa;
  report.add("unit_trace", trace_r, tolerance);

  double within_r = 0.0;
  const double off = d > 1 ? (1.0 - kappa) / (dd - 1.0) : 0.0;
  for (const auto& set : sets) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        // Elements are Hermitian, so tr(M_j M_k) = <M_j, M_k>_hs.
        const Complex overlap = hs_inner(set.elements[j], set.elements[k]);
        within_r = std::max(within_r, std::abs(overlap - (j == k ? kappa : off)));
      }
    }
  }
  report.add("within_overlap", within_r, tolerance);

  double cross_r = 0.0;
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      for (const auto& m : sets[a].elements) {
        for (const auto& n : sets[b].elements) cross_r = std::max(cross_r, std::abs(hs_inner(m, n) - 1.0 / dd));
      }
    }
  }
  report.add("cross_overlap", cross_r, tolerance);

  const bool in_range = kappa > 1.0 / dd && kappa <= 1.0 + tolerance;
  const double range_r = in_range ? 0.0 : std::max(1.0 / dd - kappa, kappa - 1.0);
  report.add("kappa_range", in_range, std::max(range_r, 0.0), tolerance);

  for (std::size_t t = 0; t < sets.size(); ++t) {
    report.merge(validate_povm(sets[t], tolerance), "set[" + std::to_string(t) + "].");
  }
  return report;
}

ComplexVector haar_random_vector(std::size_t dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("haar_random_vector: dim must be >= 1");
  CounterRng rng(seed);
  ComplexVector v(dim);
  for (auto& x : v) {
    const double re = rng.normal();
    const double im = rng.normal();
    x = Complex(re, im);
  }
  return normalized(std::move(v));
}

DensityMatrix haar_random_pure(std::size_t dim, std::uint64_t seed) {
  return DensityMatrix(ComplexMatrix::outer(haar_random_vector(dim, seed)));
}

}  // namespace fgu
