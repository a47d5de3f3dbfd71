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

// JSON layouts:
//   complex         [re, im]
//   matrix          row-major nested arrays of complex
//   measurement set {"dim": int, "kind": "projective"|"general", "elements": [matrix, ...]}
//   basis           {"dim": int, "vectors": [[complex, ...], ...]}

#include <string>

#include <json.hpp>

#include "fgu/bounds.hpp"
#include "fgu/measurements.hpp"
#include "fgu/report.hpp"

namespace fgu {

using Json = nlohmann::json;

void to_json(Json& j, const ComplexMatrix& m);
void from_json(const Json& j, ComplexMatrix& m);
void to_json(Json& j, const MeasurementSet& set);
void from_json(const Json& j, MeasurementSet& set);
void to_json(Json& j, const OrthonormalBasis& basis);
void to_json(Json& j, const VerificationReport& report);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);
Json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const Json& j);
OrthonormalBasis basis_from_json(const Json& j);

/// {"value", "S", "maximizer", "maximizer_vector", "extension"}
Json bound_to_json(const BoundResult& result);

/// 17 significant digits, '.' decimal separator.
std::string format_double(double x);

}  // namespace fgu
