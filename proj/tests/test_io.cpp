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
#include <limits>

#include "fgu/discrimination.hpp"
#include "fgu/io.hpp"
#include "fgu/rng.hpp"

using fgu::Complex;
using fgu::ComplexMatrix;
using fgu::Json;

TEST_CASE("complex and matrix JSON layout", "[io]") {
  CHECK(fgu::complex_to_json(Complex(1.5, -2.0)) == Json::array({1.5, -2.0}));
  const ComplexMatrix m{{1.0, Complex(0.0, 1.0)}, {Complex(0.0, -1.0), 2.0}};
  const Json j = m;
  CHECK(j == Json::parse("[[[1.0,0.0],[0.0,1.0]],[[0.0,-1.0],[2.0,0.0]]]"));
  CHECK(j.get<ComplexMatrix>() == m);
  CHECK_THROWS(Json::parse("[[[1,0],[0,0]],[[0,0]]]").get<ComplexMatrix>());
  CHECK_THROWS(fgu::complex_from_json(Json::parse("[1,2,3]")));
}

TEST_CASE("measurement sets round-trip exactly", "[io][property]") {
  std::vector<fgu::MeasurementSet> sets;
  for (const auto& b : fgu::mub_family_prime(5)) sets.push_back(b.measurement());
  for (const auto& s : fgu::mum_from_mubs(fgu::mub_d3_quartet(), 0.37).sets) sets.push_back(s);
  sets.push_back(fgu::b92_povm(fgu::DiscriminationPair::from_eta(0.123456789)));
  for (const auto& set : sets) {
    const Json j = set;
    const auto text = j.dump();
    const auto back = Json::parse(text).get<fgu::MeasurementSet>();
    CHECK(back.dim == set.dim);
    CHECK(back.kind == set.kind);
    REQUIRE(back.elements.size() == set.elements.size());
    for (std::size_t k = 0; k < set.size(); ++k) CHECK(back.elements[k] == set.elements[k]);
  }
}

TEST_CASE("bases round-trip exactly", "[io][property]") {
  for (const auto& b : fgu::mbb_family(7)) {
    const Json j = b;
    CHECK(j.at("dim") == 7);
    const auto back = fgu::basis_from_json(Json::parse(j.dump()));
    CHECK(back.vectors() == b.vectors());
  }
}

TEST_CASE("format_double is lossless", "[io][property]") {
  fgu::CounterRng rng(8);
  for (int i = 0; i < 2000; ++i) {
    const double x = (rng.uniform() - 0.5) * std::pow(10.0, static_cast<int>(rng.below(40)) - 20);
    CHECK(std::stod(fgu::format_double(x)) == x);
  }
  CHECK(fgu::format_double(0.0) == "0");
  CHECK(fgu::format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("report JSON", "[io]") {
  fgu::VerificationReport r;
  r.add("x", 0.5, 1.0);
  r.kappa = 0.75;
  const Json j = r;
  CHECK(j.at("passed") == true);
  CHECK(j.at("checks").size() == 1);
  CHECK(j.at("checks")[0].at("name") == "x");
  CHECK(j.at("kappa") == 0.75);
}

TEST_CASE("bound JSON", "[io]") {
  std::vector<fgu::MeasurementSet> sets;
  for (const auto& b : fgu::mub_family_prime(2)) sets.push_back(b.measurement());
  const auto r = fgu::exact_fg_bound(sets, fgu::OutcomeSelection{{0, 0, 0}, {}});
  const Json j = fgu::bound_to_json(r);
  CHECK(j.at("value").get<double>() == r.value);
  CHECK(j.at("S").get<double>() == 3.0);
  CHECK(j.at("maximizer").get<ComplexMatrix>() == r.maximizer->matrix());
  CHECK(fgu::vector_from_json(j.at("maximizer_vector")) == r.maximizer_vector);
}
