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

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kbound/scalar.hpp"

namespace kbound {

using Vector = std::vector<Scalar>;
using IndexList = std::vector<std::size_t>;

inline constexpr double kDefaultFloatTol = 1e-10;

// Dense d x n matrix over one field mode. Exact modes carry tol = 0; the
// complex_float mode requires tol > 0, used as the relative threshold of
// every zero test on its entries.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldMode mode, std::size_t rows, std::size_t cols, double tol = -1.0);

  static Matrix from_rows(FieldMode mode, const std::vector<Vector>& rows, double tol = -1.0);
  static Matrix from_columns(FieldMode mode, std::size_t rows, const std::vector<Vector>& cols,
                             double tol = -1.0);
  static Matrix from_integers(const std::vector<std::vector<long>>& rows);
  static Matrix identity(FieldMode mode, std::size_t n, double tol = -1.0);

  FieldMode mode() const { return mode_; }
  bool exact() const { return is_exact(mode_); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double tol() const { return tol_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  Matrix select_columns(std::span<const std::size_t> idx) const;
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  Matrix transpose() const;
  Matrix conj_transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;

  // Re-embeds an exact matrix into complex_float mode.
  Matrix to_float(double tol = kDefaultFloatTol) const;

  double max_magnitude() const;
  // Column j is zero (exactly, or below tol * max_magnitude() in float mode).
  bool column_is_zero(std::size_t j) const;
  bool all_integer() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldMode mode_ = FieldMode::kRational;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  double tol_ = 0.0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix echelon;
  IndexList pivot_cols;
  std::size_t rank = 0;
};

// Reduced row echelon form. Exact modes accept the first nonzero candidate
// in each column; float mode takes the largest-magnitude candidate and
// accepts it only if it is at least tol times the column's largest entry
// (over all rows) at that elimination step.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Scales v so that its first nonzero entry is 1. Zero vectors are unchanged.
Vector normalize_leading(Vector v, double tol = 0.0);

struct KernelBasis {
  std::vector<Vector> vectors;
};

// n - rank vectors spanning ker(m), each with leading entry 1.
KernelBasis kernel_basis(const Matrix& m);

// Determinant of a square matrix; Bareiss fraction-free elimination in
// exact modes, partial pivoting in float mode.
Scalar det(const Matrix& m);

struct Subdeterminant {
  IndexList rows;
  IndexList cols;
  Scalar value;
};

// Calls fn for every r x r minor (row subsets outer, column subsets inner,
// both in lexicographic order).
void for_each_subdet(const Matrix& m, std::size_t r,
                     const std::function<void(const Subdeterminant&)>& fn);
std::vector<Subdeterminant> all_subdets(const Matrix& m, std::size_t r);

// Squared Euclidean (Hermitian) distance from v to span(basis), via the
// Gram-matrix projection. Exact in exact modes; the result is real.
Scalar dist_sq_to_span(const Vector& v, const std::vector<Vector>& basis, double tol = 0.0);

// Hermitian inner product <a, b> = sum conj(a_i) b_i.
Scalar inner(const Vector& a, const Vector& b);
Scalar norm_sq(const Vector& v);

// Two nonzero vectors span a line; float mode compares 2x2 minors against
// tol * |a| * |b|.
bool parallel(const Vector& a, const Vector& b, double tol = 0.0);
bool is_zero_vector(const Vector& v, double tol = 0.0, double scale = 1.0);

// Visits all k-subsets of {0..n-1} in lexicographic order. Returning false
// from fn stops the enumeration.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const IndexList&)>& fn);
// Binomial coefficient, saturating at SIZE_MAX.
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace kbound
