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

#include "fgu/io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fgu {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex number must be [re, im]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

Json vector_to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(complex_to_json(z));
  return out;
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be an array");
  ComplexVector v;
  for (const auto& z : j) v.push_back(complex_from_json(z));
  return v;
}

void to_json(Json& j, const ComplexMatrix& m) {
  j = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(complex_to_json(m(r, c)));
    j.push_back(std::move(row));
  }
}

void from_json(const Json& j, ComplexMatrix& m) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array of rows");
  const std::size_t n = j.size();
  std::vector<Complex> data;
  data.reserve(n * n);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) throw std::invalid_argument("matrix must be square");
    for (const auto& z : row) data.push_back(complex_from_json(z));
  }
  m = ComplexMatrix(n, std::move(data));
}

void to_json(Json& j, const MeasurementSet& set) {
  j = Json{{"dim", set.dim},
           {"kind", set.kind == MeasurementKind::projective ? "projective" : "general"},
           {"elements", set.elements}};
}

void from_json(const Json& j, MeasurementSet& set) {
  set.dim = j.at("dim").get<std::size_t>();
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "projective") {
    set.kind = MeasurementKind::projective;
  } else if (kind == "general") {
    set.kind = MeasurementKind::general;
  } else {
    throw std::invalid_argument("measurement set kind must be 'projective' or 'general'");
  }
  set.elements = j.at("elements").get<std::vector<ComplexMatrix>>();
  for (const auto& m : set.elements) {
    if (m.dim() != set.dim) throw std::invalid_argument("measurement element dimension does not match 'dim'");
  }
}

void to_json(Json& j, const OrthonormalBasis& basis) {
  Json vs = Json::array();
  for (const auto& v : basis.vectors()) vs.push_back(vector_to_json(v));
  j = Json{{"dim", basis.dim()}, {"vectors", std::move(vs)}};
}

OrthonormalBasis basis_from_json(const Json& j) {
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<ComplexVector> vs;
  for (const auto& v : j.at("vectors")) vs.push_back(vector_from_json(v));
  if (vs.size() != dim) throw std::invalid_argument("basis vector count does not match 'dim'");
  return OrthonormalBasis(std::move(vs));
}

void to_json(Json& j, const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(
        Json{{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}, {"tolerance", c.tolerance}});
  }
  j = Json{{"passed", report.passed()}, {"checks", std::move(checks)}};
  if (report.kappa) j["kappa"] = *report.kappa;
}

Json bound_to_json(const BoundResult& result) {
  Json j{{"value", result.value}, {"S", result.normalizer}, {"extension", result.extension}};
  if (result.maximizer) {
    j["maximizer"] = result.maximizer->matrix();
    j["maximizer_vector"] = vector_to_json(result.maximizer_vector);
  }
  return j;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace fgu
