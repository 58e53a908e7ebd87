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
#include <optional>
#include <vector>

#include "kbound/matrix.hpp"

namespace kbound {

// Enumeration guards shared by every basis/circuit enumeration. Matrices
// with up to 64 columns pass when C(n, rank + 1) <= C(20, 9).
inline constexpr std::size_t kMaxEnumCols = 20;
inline constexpr std::size_t kMaxEnumRank = 8;
inline constexpr std::size_t kMaxEnumWideCols = 64;

// A support-minimal kernel vector. coeffs has length n, is zero off the
// support and has leading entry 1.
struct Circuit {
  IndexList support;
  Vector coeffs;
};

// Enumerates every circuit of A once, within the enumeration guard.
std::vector<Circuit> circuits(const Matrix& a);

// Circuit imbalance measure. When A has full column rank there is no
// circuit; value is then reported as 1 with has_circuit = false.
struct Kappa {
  double value = 1.0;
  bool has_circuit = false;
  // kappa^2, exact in exact modes.
  std::optional<mpq_class> value_sq;
  // Circuit witness: |x_num / x_den| attains kappa.
  std::optional<Circuit> circuit;
  std::size_t ratio_num = 0;
  std::size_t ratio_den = 0;
  // Basis-swap witness: |det(A_{B - out + in}) / det(A_B)| attains kappa.
  IndexList basis;
  std::size_t swap_out = 0;
  std::size_t swap_in = 0;
};

// max over circuits of max |x_i / x_j|. Exact modes only.
Kappa kappa_circuit(const Matrix& a);
// max over bases B, i in B, j not in B of |det(A_{B-i+j}) / det(A_B)|, with
// bases taken in a full-row-rank echelon form of A so rank-deficient inputs
// work. Available in every mode.
Kappa kappa_detratio(const Matrix& a);
// Exact modes use the circuit route; float mode uses determinant ratios.
Kappa kappa(const Matrix& a);

struct DeltaMeasure {
  // delta^2, exact in exact modes (float modes fill only delta_sq_float).
  std::optional<mpq_class> delta_sq;
  double delta_sq_float = 0.0;
  IndexList basis;
  std::size_t column = 0;
};

// min over bases B and i in B of dist(a_i, span(A_{B-i}))^2 / |a_i|^2.
// Requires rank(A) = d.
DeltaMeasure delta_measure(const Matrix& a);

struct DeltaModularity {
  mpz_class value;
  std::size_t rank = 0;
  IndexList rows;
  IndexList cols;
};

// max |det| over r x r submatrices, r = rank(A). Integer matrices only.
DeltaModularity delta_modularity(const Matrix& a);

// Largest sampled ||A^* (A D A^*)^{-1} A D||_op over random positive
// diagonals D with log-uniform entries in [1e-6, 1e6]. A lower bound on
// chi-bar. Requires rank(A) = d.
double chibar_sample(const Matrix& a, std::size_t trials, std::uint64_t seed);

// A matrix whose kernel is the coordinate projection of ker(A) onto J
// (coordinates listed in the order given).
Matrix project_kernel(const Matrix& a, const IndexList& j);

}  // namespace kbound
