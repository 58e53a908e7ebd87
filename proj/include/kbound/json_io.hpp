// Copyright 2026 The kbound Authors.
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

#include <string>

#include "json.hpp"
#include "kbound/condition.hpp"
#include "kbound/design.hpp"
#include "kbound/graver.hpp"
#include "kbound/incidence.hpp"
#include "kbound/matroid.hpp"

namespace kbound {

using Json = nlohmann::ordered_json;

// Exact values are written as "p/q" strings; integers may also be read from
// JSON numbers.
Json rational_to_json(const mpq_class& q);
mpq_class rational_from_json(const Json& j);
mpz_class integer_from_json(const Json& j);

// rational: "p/q"; gaussian_rational: ["p/q", "r/s"]; complex_float: [re, im]
// (a bare number is read as a real float).
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, FieldMode mode);

// {"field", "rows", "cols", "tol", "data"}
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// {"field", "dim", "points", "tol"}
PointConfig points_from_json(const Json& j);
Json points_to_json(const PointConfig& s);

// {"rep": matrix, "ground": [ids]}; a bare matrix document is accepted too.
Json matroid_to_json(const LinearMatroid& m);
LinearMatroid matroid_from_json(const Json& j);

// {"A", "b", "u", "c"}. A is a matrix document or a nested array of
// integers.
Json ip_to_json(const IPInstance& ip);
IPInstance ip_from_json(const Json& j);

// "-" reads stdin.
Json read_json_file(const std::string& path);
// Writes two-space indented JSON plus a newline; "-" or "" means stdout.
void write_json(const Json& j, const std::string& path);

Json to_json(const Circuit& c);
Json to_json(const Kappa& k);
Json to_json(const DeltaMeasure& d);
Json to_json(const DeltaModularity& d);
Json to_json(const LineSet& ls, const PointConfig& s);
Json to_json(const MaxLines& m);
Json to_json(const MaxlinesReport& r);
Json to_json(const MinorChain& c);
Json to_json(const LongestLine& l);
Json to_json(const FlatReport& r);
Json to_json(const DesignCertificate& c);
Json to_json(const ScalingResult& r);
Json to_json(const DesignRankReport& r);
Json to_json(const GraverBasis& g);
Json to_json(const KappaGraverReport& r);
Json to_json(const CollinearBlockReport& r);
Json to_json(const SeparableReduction& r);
Json to_json(const LPSolution& s);
Json to_json(const IPSolution& s);
Json to_json(const ProximityReport& r);

}  // namespace kbound
