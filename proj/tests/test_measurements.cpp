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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fgu/discrimination.hpp"
#include "fgu/measurements.hpp"
#include "fgu/rng.hpp"

using fgu::Complex;
using fgu::ComplexMatrix;
using fgu::ComplexVector;
using Catch::Matchers::WithinAbs;

namespace {

const double kPi = std::numbers::pi;
const Complex kOmega = std::polar(1.0, 2.0 * kPi / 3.0);

double overlap(const ComplexVector& a, const ComplexVector& b) { return std::abs(fgu::inner(a, b)); }

bool same_up_to_phase(const ComplexVector& a, const ComplexVector& b) {
  return std::abs(overlap(a, b) - 1.0) < 1e-12;
}

ComplexVector scaled(std::initializer_list<Complex> v, double s) {
  ComplexVector out(v);
  for (auto& x : out) x *= s;
  return out;
}

}  // namespace

TEST_CASE("outcome_probability examples", "[measurements]") {
  const ComplexVector e0{1.0, 0.0};
  const auto p0 = ComplexMatrix::outer(e0);
  CHECK_THAT(fgu::outcome_probability(p0, fgu::DensityMatrix::pure(e0)), WithinAbs(1.0, 1e-15));

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto rho = fgu::haar_random_pure(3, seed);
    auto mixed = ComplexMatrix::identity(3);
    mixed *= Complex(1.0 / 3.0);
    CHECK_THAT(fgu::outcome_probability(mixed, rho), WithinAbs(1.0 / 3.0, 1e-12));
  }

  // 2θ = π/2: orthogonal inputs, the inconclusive element vanishes.
  const auto b92 = fgu::b92_povm(fgu::DiscriminationPair::limit(0.0));
  CHECK(b92.elements[2].max_abs() < 1e-12);
  CHECK_THAT(fgu::outcome_probability(b92.elements[2], fgu::haar_random_pure(2, 4)), WithinAbs(0.0, 1e-12));

  CHECK_THROWS_AS(fgu::outcome_probability(ComplexMatrix::identity(3), fgu::DensityMatrix::pure(e0)),
                  std::invalid_argument);
}

TEST_CASE("outcome_probability never exceeds the spectral norm", "[measurements][property]") {
  std::vector<fgu::MeasurementSet> sets;
  for (const auto& b : fgu::mub_family_prime(3)) sets.push_back(b.measurement());
  for (const auto& s : fgu::mum_from_mubs(fgu::mub_family_prime(3), 0.4).sets) sets.push_back(s);
  sets.push_back(fgu::b92_povm(fgu::DiscriminationPair::from_eta(0.3)));
  for (const auto& set : sets) {
    for (const auto& m : set.elements) {
      const double bound = fgu::spectral_norm_psd(m);
      for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const double p = fgu::outcome_probability(m, fgu::haar_random_pure(set.dim, seed));
        REQUIRE(p >= 0.0);
        REQUIRE(p <= bound + fgu::tol::probability);
      }
    }
  }
}

TEST_CASE("validate_povm examples", "[measurements]") {
  const auto std3 = fgu::standard_basis(3).measurement();
  CHECK(fgu::validate_povm(std3, 1e-10).passed());

  const auto b92 = fgu::b92_povm(fgu::DiscriminationPair::from_theta(kPi / 8.0));
  CHECK(b92.kind == fgu::MeasurementKind::general);
  CHECK(fgu::validate_povm(b92, 1e-12).passed());

  auto dropped = std3;
  dropped.elements.pop_back();
  const auto r = fgu::validate_povm(dropped, 1e-10);
  CHECK_FALSE(r.passed());
  REQUIRE(r.find("completeness") != nullptr);
  CHECK_THAT(r.find("completeness")->residual, WithinAbs(1.0, 1e-12));
}

TEST_CASE("validate_povm flags non-projectors in projective sets", "[measurements]") {
  auto set = fgu::standard_basis(2).measurement();
  set.elements[0] = ComplexMatrix{{0.5, 0.0}, {0.0, 0.5}};
  set.elements[1] = ComplexMatrix{{0.5, 0.0}, {0.0, 0.5}};
  const auto r = fgu::validate_povm(set, 1e-10);
  CHECK(r.find("completeness")->passed);
  CHECK_FALSE(r.find("rank_one_projector[0]")->passed);
  set.kind = fgu::MeasurementKind::general;
  CHECK(fgu::validate_povm(set, 1e-10).passed());
}

TEST_CASE("orthonormal basis and density matrix validation", "[measurements]") {
  CHECK_THROWS_AS(fgu::OrthonormalBasis({{1.0, 0.0}, {1.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(fgu::DensityMatrix(ComplexMatrix::identity(2)), std::invalid_argument);
  CHECK_THAT(fgu::DensityMatrix::maximally_mixed(4).purity(), WithinAbs(0.25, 1e-15));
}

TEST_CASE("check_mub_pair examples", "[measurements]") {
  const auto pauli = fgu::mub_family_prime(2);
  CHECK(fgu::check_mub_pair(pauli[0], pauli[1], 1e-10).passed());

  const auto q = fgu::mub_d3_quartet();
  CHECK(fgu::check_mub_pair(q[0], q[1], 1e-10).passed());
  for (const auto& a : q[0].vectors()) {
    for (const auto& b : q[1].vectors()) CHECK_THAT(overlap(a, b), WithinAbs(1.0 / std::sqrt(3.0), 1e-14));
  }
  CHECK_FALSE(fgu::check_mub_pair(q[0], q[0], 1e-10).passed());
}

TEST_CASE("fourier_basis examples", "[measurements]") {
  const auto f2 = fgu::fourier_basis(2);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(same_up_to_phase(f2[0], {r, r}));
  CHECK(same_up_to_phase(f2[1], {r, -r}));

  const auto f3 = fgu::fourier_basis(3);
  const double s = 1.0 / std::sqrt(3.0);
  CHECK(same_up_to_phase(f3[1], scaled({1.0, kOmega, kOmega * kOmega}, s)));

  for (std::size_t d = 2; d <= 12; ++d) {
    CHECK(fgu::check_mub_pair(fgu::standard_basis(d), fgu::fourier_basis(d), 1e-10).passed());
  }
}

TEST_CASE("d=3 quartet examples", "[measurements]") {
  const auto q = fgu::mub_d3_quartet();
  REQUIRE(q.size() == 4);
  const double s = 1.0 / std::sqrt(3.0);
  CHECK(same_up_to_phase(q[0][0], {1.0, 0.0, 0.0}));
  CHECK(same_up_to_phase(q[2][0], scaled({1.0, kOmega, 1.0}, s)));
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) CHECK(fgu::check_mub_pair(q[a], q[b], 1e-10).passed());
  }
  // The second basis diagonalizes the cyclic shift X|j> = |j+1>.
  ComplexMatrix x(3);
  for (std::size_t j = 0; j < 3; ++j) x((j + 1) % 3, j) = 1.0;
  for (const auto& v : q[1].vectors()) {
    const auto xv = x.apply(v);
    const Complex lambda = fgu::inner(v, xv);
    CHECK_THAT(std::abs(lambda), WithinAbs(1.0, 1e-12));
    double resid = 0.0;
    for (std::size_t i = 0; i < 3; ++i) resid = std::max(resid, std::abs(xv[i] - lambda * v[i]));
    CHECK(resid < 1e-12);
  }
}

TEST_CASE("mub_family_prime examples", "[measurements]") {
  CHECK_THROWS_AS(fgu::mub_family_prime(4), std::invalid_argument);
  CHECK_THROWS_AS(fgu::mub_family_prime(1), std::invalid_argument);

  // Pauli eigenbases at d = 2.
  const auto p = fgu::mub_family_prime(2);
  REQUIRE(p.size() == 3);
  const ComplexMatrix sx{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix sy{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
  const ComplexMatrix sz{{1.0, 0.0}, {0.0, -1.0}};
  const ComplexMatrix* paulis[] = {&sz, &sx, &sy};
  for (std::size_t t = 0; t < 3; ++t) {
    for (const auto& v : p[t].vectors()) CHECK_THAT(std::abs(paulis[t]->expectation(v)), WithinAbs(1.0, 1e-12));
  }

  for (std::size_t d : {3u, 5u, 7u, 11u}) {
    const auto fam = fgu::mub_family_prime(d);
    REQUIRE(fam.size() == d + 1);
    for (std::size_t a = 0; a < fam.size(); ++a) {
      CHECK(fgu::validate_povm(fam[a].measurement(), 1e-10).passed());
      for (std::size_t b = a + 1; b < fam.size(); ++b) CHECK(fgu::check_mub_pair(fam[a], fam[b], 1e-10).passed());
    }
  }
}

TEST_CASE("mbb_family examples", "[measurements]") {
  // t = 0 is the Fourier basis.
  for (std::size_t d : {2u, 3u, 6u}) {
    const auto fam = fgu::mbb_family(d);
    const auto f = fgu::fourier_basis(d);
    for (std::size_t j = 0; j < d; ++j) CHECK(same_up_to_phase(fam[0][j], f[j]));
  }
  // d = 3: <a_0^(0)|a_0^(1)> = 1 + (ω - 1)/3.
  const auto fam3 = fgu::mbb_family(3);
  const Complex expected = 1.0 + (kOmega - 1.0) / 3.0;
  CHECK(std::abs(fgu::inner(fam3[0][0], fam3[1][0]) - expected) < 1e-12);
  for (std::size_t d = 2; d <= 16; ++d) {
    const auto fam = fgu::mbb_family(d);
    REQUIRE(fam.size() == d);
    CHECK(fgu::validate_mbb(fam, 1e-10).passed());
    for (const auto& b : fam) CHECK(b.gram_residual() < 1e-10);
  }
}

TEST_CASE("MBB squared phase-difference sum is 2d^2", "[measurements][property]") {
  for (std::size_t d = 2; d <= 16; ++d) {
    const auto fam = fgu::mbb_family(d);
    // |<a_x^(s)|a_x^(t)>|^2 = |1 + (e^{i(t-s)φ} - 1)/d|^2 recovers |e^{i(t-s)φ} - 1|^2 from the overlaps.
    double sum = 0.0;
    for (std::size_t s = 0; s < d; ++s) {
      for (std::size_t t = 0; t < d; ++t) {
        if (s == t) continue;
        const Complex ip = fgu::inner(fam[s][0], fam[t][0]);
        const Complex phase_minus_one = (ip - 1.0) * static_cast<double>(d);
        sum += std::norm(phase_minus_one);
      }
    }
    const double dd = static_cast<double>(d);
    CHECK_THAT(sum, WithinAbs(2.0 * dd * dd, 1e-9 * dd * dd));
  }
}

TEST_CASE("mum_from_mubs examples", "[measurements]") {
  const auto q = fgu::mub_d3_quartet();
  const auto one = fgu::mum_from_mubs(q, 1.0);
  CHECK_THAT(one.kappa, WithinAbs(1.0, 1e-15));
  for (const auto& set : one.sets) {
    CHECK(set.kind == fgu::MeasurementKind::projective);
    CHECK(fgu::validate_povm(set, 1e-10).passed());
  }

  const auto tiny = fgu::mum_from_mubs(q, 1e-9);
  CHECK_THAT(tiny.kappa, WithinAbs(1.0 / 3.0, 1e-8));
  auto mixed = ComplexMatrix::identity(3);
  mixed *= Complex(1.0 / 3.0);
  CHECK((tiny.sets[2].elements[1] - mixed).max_abs() < 1e-9);

  const auto half = fgu::mum_from_mubs(fgu::mub_family_prime(2), 0.5);
  CHECK_THAT(half.kappa, WithinAbs(5.0 / 8.0, 1e-15));
  for (const auto& set : half.sets) {
    for (const auto& m : set.elements) CHECK_THAT(fgu::hs_inner(m, m).real(), WithinAbs(5.0 / 8.0, 1e-14));
  }

  CHECK_THROWS_AS(fgu::mum_from_mubs(q, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(fgu::mum_from_mubs(q, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(fgu::mum_from_mubs({q[0], q[0]}, 0.5), std::invalid_argument);
}

TEST_CASE("validate_mum examples", "[measurements]") {
  const auto fam = fgu::mum_from_mubs(fgu::mub_d3_quartet(), 0.7);
  const auto r = fgu::validate_mum(fam.sets, 1e-10);
  CHECK(r.passed());
  REQUIRE(r.kappa.has_value());
  CHECK_THAT(*r.kappa, WithinAbs(0.49 + 0.51 / 3.0, 1e-12));
  CHECK_THAT(*r.kappa, WithinAbs(0.66, 1e-12));

  const auto proj = fgu::mum_from_mubs(fgu::mub_family_prime(5), 1.0);
  const auto rp = fgu::validate_mum(proj.sets, 1e-10);
  CHECK(rp.passed());
  CHECK_THAT(*rp.kappa, WithinAbs(1.0, 1e-12));

  const auto b = fgu::standard_basis(3).measurement();
  const auto rd = fgu::validate_mum({b, b}, 1e-10);
  CHECK_FALSE(rd.passed());
  CHECK_FALSE(rd.find("cross_overlap")->passed);
}

TEST_CASE("MUM residuals stay at rounding level", "[measurements][property]") {
  for (std::size_t d : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (double s : {0.1, 0.5, 0.9, 1.0}) {
      const auto fam = fgu::mum_from_mubs(fgu::mub_family_prime(d), s);
      const auto r = fgu::validate_mum(fam.sets, 1e-12);
      CHECK(r.passed());
      const double dd = static_cast<double>(d);
      CHECK_THAT(*r.kappa, WithinAbs(s * s + (1.0 - s * s) / dd, 1e-12));
    }
  }
}

TEST_CASE("Haar random states", "[measurements]") {
  for (std::uint64_t seed : {0ull, 1ull, 12345ull}) {
    const auto rho = fgu::haar_random_pure(5, seed);
    CHECK_THAT(rho.matrix().trace().real(), WithinAbs(1.0, 1e-12));
    CHECK_THAT(rho.purity(), WithinAbs(1.0, 1e-12));
    CHECK(rho.matrix() == fgu::haar_random_pure(5, seed).matrix());
  }
  CHECK_FALSE(fgu::haar_random_vector(4, 1) == fgu::haar_random_vector(4, 2));

  double mean = 0.0;
  const int n = 10000;
  for (int seed = 0; seed < n; ++seed) mean += fgu::haar_random_pure(4, seed).matrix()(0, 0).real();
  mean /= n;
  CHECK_THAT(mean, WithinAbs(0.25, 0.02));
}
