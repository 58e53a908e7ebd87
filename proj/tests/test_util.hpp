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

#include <random>
#include <string>
#include <vector>

#include "kbound/matrix.hpp"

namespace kbound::testing {

inline Scalar q(const char* text) { return Scalar::rational(parse_rational(text)); }
inline Scalar z(long v) { return Scalar::integer(v); }
inline Scalar g(long re, long im) { return Scalar::gaussian(mpq_class(re), mpq_class(im)); }

inline Matrix ints(const std::vector<std::vector<long>>& rows) { return Matrix::from_integers(rows); }

inline Vector ivec(const std::vector<long>& v) {
  Vector out;
  for (auto x : v) out.push_back(Scalar::integer(x));
  return out;
}

// Expansion by minors along the first row; independent of the elimination
// code under test.
inline Scalar laplace_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Scalar::one(m.mode());
  if (n == 1) return m(0, 0);
  Scalar acc = Scalar::zero(m.mode());
  for (std::size_t c = 0; c < n; ++c) {
    IndexList rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != c) cols.push_back(j);
    }
    Scalar term = m(0, c) * laplace_det(m.submatrix(rows, cols));
    if (c % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

// Inverse by the adjugate formula with Laplace determinants.
inline Matrix cramer_inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  Scalar dt = laplace_det(m);
  Matrix inv(m.mode(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IndexList rows, cols;
      for (std::size_t t = 0; t < n; ++t) {
        if (t != j) rows.push_back(t);
        if (t != i) cols.push_back(t);
      }
      Scalar cof = laplace_det(m.submatrix(rows, cols));
      if ((i + j) % 2 == 1) cof = -cof;
      inv(i, j) = cof / dt;
    }
  }
  return inv;
}

inline Matrix random_rational(std::size_t d, std::size_t n, std::mt19937_64& rng, long range = 4,
                              long max_den = 3) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, max_den);
  Matrix m(FieldMode::kRational, d, n);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar::rational(mpq_class(num(rng), den(rng)));
  }
  return m;
}

// Exact unit vector in Q^d: inverse stereographic image of a rational point.
inline Vector rational_unit_vector(std::size_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<mpq_class> t(d - 1);
  mpq_class s = 0;
  for (auto& x : t) {
    x = mpq_class(num(rng), den(rng));
    x.canonicalize();
    s += x * x;
  }
  Vector v;
  for (auto& x : t) v.push_back(Scalar::rational(2 * x / (s + 1)));
  v.push_back(Scalar::rational((s - 1) / (s + 1)));
  return v;
}

}  // namespace kbound::testing
