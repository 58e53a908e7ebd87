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

#include <cstdint>

#include "kbound/incidence.hpp"
#include "kbound/matrix.hpp"

namespace kbound {

// Standard basis e_1..e_d followed by e_i - zeta^k e_j for i < j and
// k = 0..t-1, zeta a primitive t-th root of unity. Exact for t in {1,2,4}
// (rational for 1 and 2, gaussian_rational for 4), complex_float otherwise.
Matrix dowling(std::size_t d, std::size_t t);

// 2 x n float matrix with column i = (cos(i pi / n), sin(i pi / n)).
Matrix half_circle(std::size_t n);

// v x C(v,2) 0/1 matrix; columns are the edges {a,b}, a < b, in
// lexicographic order.
Matrix unsigned_incidence_complete(std::size_t v);

// side x side integer grid in the plane, point index = x * side + y.
PointConfig grid(std::size_t side);

// n distinct integer points in Q^d with affine dimension d. Coordinates are
// drawn from a small box so that collinear triples are common.
PointConfig random_config(std::size_t d, std::size_t n, std::uint64_t seed);

// Full-dimensional integer configuration of n or n + 1 points built from
// three-point lines, so every point lies on a special line.
PointConfig random_special_config(std::size_t d, std::size_t n, std::uint64_t seed);

// Uniform integer entries in [lo, hi].
Matrix random_integer_matrix(std::size_t d, std::size_t n, long lo, long hi, std::uint64_t seed);

// Entries p/q with p uniform in [-range, range] and q in [1, max_den].
Matrix random_rational_matrix(std::size_t d, std::size_t n, std::uint64_t seed, long range = 4,
                              long max_den = 3);

// Columns are exact unit vectors of Q^d (inverse stereographic images of
// random rational points). Requires d >= 2.
Matrix random_unit_column_matrix(std::size_t d, std::size_t n, std::uint64_t seed);

// 2 x l integer matrix with nonzero, pairwise non-collinear columns and
// entries in [-range, range].
Matrix random_noncollinear_2xl(std::size_t l, std::uint64_t seed, long range = 6);

}  // namespace kbound
