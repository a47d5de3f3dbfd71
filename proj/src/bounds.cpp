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

#include "fgu/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fgu {

namespace {

constexpr double kPurityTol = 1e-12;

void require_dims(std::size_t d, std::size_t n, const char* what) {
  if (d < 2) throw std::invalid_argument(std::string(what) + ": d must be >= 2");
  if (n < 1) throw std::invalid_argument(std::string(what) + ": N must be >= 1");
}

void require_purity(std::size_t d, double purity, const char* what) {
  const double lo = 1.0 / static_cast<double>(d);
  if (!(purity >= lo - kPurityTol && purity <= 1.0 + kPurityTol)) {
    throw std::invalid_argument(std::string(what) + ": purity must lie in [1/d, 1]");
  }
}

void require_kappa(std::size_t d, double kappa, const char* what) {
  if (!(kappa > 1.0 / static_cast<double>(d) && kappa <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": kappa must lie in (1/d, 1]");
  }
}

MeasurementSet single_projector(const ComplexVector& v) {
  return {v.size(), MeasurementKind::projective, {ComplexMatrix::outer(v)}};
}

}  // namespace

bool OutcomeSelection::equal_weights() const {
  return std::all_of(weights.begin(), weights.end(), [&](double w) { return w == weights.front(); });
}

double OutcomeSelection::weight_sum() const {
  if (weights.empty()) return static_cast<double>(outcomes.size());
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

void validate_selection(std::span<const MeasurementSet> sets, const OutcomeSelection& sel) {
  if (sets.empty()) throw std::invalid_argument("selection: no measurements");
  if (sel.outcomes.size() != sets.size()) {
    throw std::invalid_argument("selection: " + std::to_string(sel.outcomes.size()) + " outcomes for " +
                                std::to_string(sets.size()) + " measurements");
  }
  if (!sel.weights.empty() && sel.weights.size() != sets.size()) {
    throw std::invalid_argument("selection: weight count does not match measurement count");
  }
  bool any_positive = sel.weights.empty();
  for (double w : sel.weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("selection: weights must be nonnegative");
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) throw std::invalid_argument("selection: at least one weight must be positive");
  const std::size_t d = sets.front().dim;
  for (std::size_t t = 0; t < sets.size(); ++t) {
    if (sets[t].dim != d) throw std::invalid_argument("selection: measurements differ in dimension");
    if (sel.outcomes[t] >= sets[t].size()) {
      throw std::invalid_argument("selection: outcome " + std::to_string(sel.outcomes[t]) +
                                  " out of range for measurement " + std::to_string(t));
    }
  }
}

double selection_normalizer(std::span<const MeasurementSet> sets, const OutcomeSelection& sel, Normalization norm) {
  validate_selection(sets, sel);
  double normalizer = 0.0;
  for (std::size_t t = 0; t < sets.size(); ++t) {
    const double w = sel.weight(t);
    if (w == 0.0) continue;
    if (norm == Normalization::weight_sum || sets[t].kind == MeasurementKind::projective) {
      normalizer += w;
    } else {
      normalizer += w * spectral_norm_psd(sets[t].elements[sel.outcomes[t]]);
    }
  }
  if (!(normalizer > 0.0)) throw std::invalid_argument("selection: selected elements are all zero");
  return normalizer;
}

ComplexMatrix averaged_operator(std::span<const MeasurementSet> sets, const OutcomeSelection& sel, Normalization norm) {
  const double normalizer = selection_normalizer(sets, sel, norm);
  ComplexMatrix total(sets.front().dim);
  for (std::size_t t = 0; t < sets.size(); ++t) {
    const double w = sel.weight(t);
    if (w != 0.0) total += sets[t].elements[sel.outcomes[t]] * Complex(w / normalizer);
  }
  return total;
}

double exact_fg_value(std::span<const MeasurementSet> sets, const OutcomeSelection& sel, Normalization norm) {
  return hermitian_eig(averaged_operator(sets, sel, norm)).max_eigenvalue();
}

BoundResult exact_fg_bound(std::span<const MeasurementSet> sets, const OutcomeSelection& sel, Normalization norm) {
  BoundResult result;
  result.normalizer = selection_normalizer(sets, sel, norm);
  result.op = averaged_operator(sets, sel, norm);
  const auto eig = hermitian_eig(result.op);
  if (eig.min_eigenvalue() < -tol::psd) throw std::domain_error("exact_fg_bound: operator is not positive");
  result.value = eig.max_eigenvalue();
  result.maximizer_vector = eig.eigenvector(eig.eigenvalues.size() - 1);
  result.maximizer = DensityMatrix::pure(result.maximizer_vector);
  const bool any_general = std::any_of(sets.begin(), sets.end(),
                                       [](const MeasurementSet& m) { return m.kind == MeasurementKind::general; });
  result.extension = norm == Normalization::per_element_norm && any_general && !sel.equal_weights();
  return result;
}

double mub_closed_bound(std::size_t d, std::size_t n) {
  require_dims(d, n, "mub_closed_bound");
  const double dd = static_cast<double>(d);
  return (1.0 + (dd - 1.0) / std::sqrt(static_cast<double>(n))) / dd;
}

double mub_purity_bound(std::size_t d, std::size_t n, double purity) {
  require_dims(d, n, "mub_purity_bound");
  require_purity(d, purity, "mub_purity_bound");
  const double dd = static_cast<double>(d);
  const double nn = static_cast<double>(n);
  return std::sqrt(purity) * std::sqrt((nn + dd - 1.0) / (nn * dd));
}

double mum_closed_bound(std::size_t d, std::size_t n, double kappa) {
  require_dims(d, n, "mum_closed_bound");
  require_kappa(d, kappa, "mum_closed_bound");
  const double dd = static_cast<double>(d);
  return (1.0 + std::sqrt((dd - 1.0) * (kappa * dd - 1.0) / static_cast<double>(n))) / dd;
}

double mum_purity_bound(std::size_t d, std::size_t n, double kappa, double purity) {
  require_dims(d, n, "mum_purity_bound");
  require_kappa(d, kappa, "mum_purity_bound");
  require_purity(d, purity, "mum_purity_bound");
  const double dd = static_cast<double>(d);
  const double nn = static_cast<double>(n);
  return std::sqrt(purity) * std::sqrt((nn + kappa * dd - 1.0) / (nn * dd));
}

double mbb_closed_bound(std::size_t d) {
  if (d < 2) throw std::invalid_argument("mbb_closed_bound: d must be >= 2");
  const double dd = static_cast<double>(d);
  return (1.0 + std::sqrt(2.0 - 2.0 / dd)) / dd;
}

double purity_bound_relative_excess(std::size_t d) {
  const double spectral = mub_closed_bound(d, d + 1);
  return (mub_purity_bound(d, d + 1, 1.0) - spectral) / spectral;
}

bool is_permutation_selection(const OutcomeSelection& sel, std::size_t d) {
  if (sel.outcomes.size() != d || !sel.equal_weights()) return false;
  std::vector<bool> seen(d, false);
  for (std::size_t x : sel.outcomes) {
    if (x >= d || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

double triple_characteristic(double eta, double lambda) {
  const double alpha2 = (1.0 + eta - 2.0 * eta * eta) / 2.0;
  const double beta2 = (1.0 - eta) / 2.0;
  return (lambda - 2.0 * beta2) * (lambda * lambda - (2.0 + eta) * lambda + 2.0 * alpha2);
}

EqualOverlapTriple triple_equal_overlap(double eta) {
  if (!(eta >= 0.0 && eta < 1.0)) throw std::invalid_argument("triple_equal_overlap: eta must lie in [0, 1)");
  EqualOverlapTriple out;
  out.eta = eta;
  out.alpha = std::sqrt((1.0 + eta - 2.0 * eta * eta) / 2.0);
  out.beta = std::sqrt((1.0 - eta) / 2.0);
  out.vectors = {ComplexVector{out.alpha, -out.beta, eta}, ComplexVector{out.alpha, out.beta, eta},
                 ComplexVector{0.0, 0.0, 1.0}};

  const std::vector<MeasurementSet> sets = {single_projector(out.vectors[0]), single_projector(out.vectors[1]),
                                            single_projector(out.vectors[2])};
  out.bound = exact_fg_bound(sets, OutcomeSelection{{0, 0, 0}, {}});
  const auto eig = hermitian_eig(out.bound.op * Complex(out.bound.normalizer));
  std::copy(eig.eigenvalues.begin(), eig.eigenvalues.end(), out.spectrum.begin());

  const double scale = 1.0 / std::sqrt(3.0 * (1.0 + 2.0 * eta));
  out.saturating_state = {std::sqrt(2.0 * (1.0 + eta - 2.0 * eta * eta)) * scale, 0.0, (1.0 + 2.0 * eta) * scale};
  for (const auto& c : out.vectors) {
    const double overlap = std::norm(inner(c, out.saturating_state));
    out.overlap_residual = std::max(out.overlap_residual, std::abs(overlap - out.bound.value));
  }
  return out;
}

double triplet_regular_bound() {
  return (1.0 + 2.0 / std::sqrt(3.0) * std::cos(std::numbers::pi / 18.0)) / 3.0;
}

double determinant3(const ComplexMatrix& m) {
  if (m.dim() != 3) throw std::invalid_argument("determinant3: expected a 3x3 matrix");
  const Complex det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                      m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                      m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  return det.real();
}

double principal_minor_sum3(const ComplexMatrix& m) {
  if (m.dim() != 3) throw std::invalid_argument("principal_minor_sum3: expected a 3x3 matrix");
  auto minor = [&](std::size_t i, std::size_t j) { return (m(i, i) * m(j, j) - m(i, j) * m(j, i)).real(); };
  return minor(0, 1) + minor(0, 2) + minor(1, 2);
}

TripletClassification classify_triplet_d3(const std::array<QuartetPick, 3>& picks) {
  static const auto quartet = mub_d3_quartet();
  for (std::size_t a = 0; a < 3; ++a) {
    if (picks[a].basis >= quartet.size() || picks[a].vector >= 3) {
      throw std::invalid_argument("classify_triplet_d3: pick out of range");
    }
    for (std::size_t b = a + 1; b < 3; ++b) {
      if (picks[a].basis == picks[b].basis) {
        throw std::invalid_argument("classify_triplet_d3: vectors must come from three distinct bases");
      }
    }
  }
  std::vector<MeasurementSet> sets;
  OutcomeSelection sel;
  for (const auto& p : picks) {
    sets.push_back(quartet[p.basis].measurement());
    sel.outcomes.push_back(p.vector);
  }

  TripletClassification out;
  out.picks = picks;
  out.projector_sum = ComplexMatrix(3);
  for (const auto& p : picks) out.projector_sum += quartet[p.basis].projector(p.vector);
  out.determinant = determinant3(out.projector_sum);
  out.trace = out.projector_sum.trace().real();
  out.minor_sum = principal_minor_sum3(out.projector_sum);
  out.bound = exact_fg_bound(sets, sel).value;
  // Exact determinants are 0 and 1/3; split at the midpoint.
  out.cls = out.determinant > 1.0 / 6.0 ? TripletClass::regular : TripletClass::singular;
  out.closed_form = out.cls == TripletClass::regular ? triplet_regular_bound() : kTripletSingularBound;
  return out;
}

TripletClassification classify_triplet_d3(const std::array<ComplexVector, 3>& vectors) {
  static const auto quartet = mub_d3_quartet();
  std::array<QuartetPick, 3> picks{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (vectors[i].size() != 3) throw std::invalid_argument("classify_triplet_d3: vectors must have 3 entries");
    const auto v = normalized(vectors[i]);
    bool found = false;
    for (std::size_t b = 0; b < quartet.size() && !found; ++b) {
      for (std::size_t k = 0; k < 3 && !found; ++k) {
        if (std::abs(inner(quartet[b][k], v)) > 1.0 - 1e-9) {
          picks[i] = {b, k};
          found = true;
        }
      }
    }
    if (!found) throw std::invalid_argument("classify_triplet_d3: vector is not a quartet basis vector");
  }
  return classify_triplet_d3(picks);
}

}  // namespace fgu
