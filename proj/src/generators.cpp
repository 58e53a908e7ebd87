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

#include "kbound/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

namespace kbound {

Matrix dowling(std::size_t d, std::size_t t) {
  if (d < 2 || t < 1) throw PreconditionError("dowling requires d >= 2 and t >= 1");
  FieldMode mode = FieldMode::kComplexFloat;
  if (t == 1 || t == 2) mode = FieldMode::kRational;
  if (t == 4) mode = FieldMode::kGaussianRational;
  auto root_power = [&](std::size_t k) {
    switch (mode) {
      case FieldMode::kRational:
        return Scalar::integer(k % 2 == 0 ? 1 : -1);
      case FieldMode::kGaussianRational: {
        static const int re[] = {1, 0, -1, 0};
        static const int im[] = {0, 1, 0, -1};
        return Scalar::gaussian(mpq_class(re[k % 4]), mpq_class(im[k % 4]));
      }
      default: {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(t);
        return Scalar::complex(std::polar(1.0, angle));
      }
    }
  };
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < d; ++i) {
    Vector e(d, Scalar::zero(mode));
    e[i] = Scalar::one(mode);
    cols.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = 0; k < t; ++k) {
        Vector c(d, Scalar::zero(mode));
        c[i] = Scalar::one(mode);
        c[j] = -root_power(k);
        cols.push_back(std::move(c));
      }
    }
  }
  return Matrix::from_columns(mode, d, cols);
}

Matrix half_circle(std::size_t n) {
  if (n < 1) throw PreconditionError("half_circle requires n >= 1");
  Matrix m(FieldMode::kComplexFloat, 2, n);
  for (std::size_t i = 0; i < n; ++i) {
    double angle = static_cast<double>(i) * std::numbers::pi / static_cast<double>(n);
    m(0, i) = Scalar::complex({std::cos(angle), 0.0});
    m(1, i) = Scalar::complex({std::sin(angle), 0.0});
  }
  return m;
}

Matrix unsigned_incidence_complete(std::size_t v) {
  if (v < 3) throw PreconditionError("unsigned_incidence_complete requires v >= 3");
  Matrix m(FieldMode::kRational, v, v * (v - 1) / 2);
  std::size_t col = 0;
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b, ++col) {
      m(a, col) = Scalar::integer(1);
      m(b, col) = Scalar::integer(1);
    }
  }
  return m;
}

PointConfig grid(std::size_t side) {
  if (side < 1) throw PreconditionError("grid requires side >= 1");
  std::vector<Vector> pts;
  for (std::size_t x = 0; x < side; ++x) {
    for (std::size_t y = 0; y < side; ++y) {
      pts.push_back({Scalar::integer(static_cast<long>(x)), Scalar::integer(static_cast<long>(y))});
    }
  }
  return PointConfig(FieldMode::kRational, 2, std::move(pts));
}

PointConfig random_config(std::size_t d, std::size_t n, std::uint64_t seed) {
  if (d < 2 || n < d + 1) throw PreconditionError("random_config requires d >= 2 and n >= d + 1");
  long radius = 2;
  while (std::pow(2.0 * static_cast<double>(radius) + 1.0, static_cast<double>(d)) <
         2.0 * static_cast<double>(n)) {
    ++radius;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-radius, radius);
  for (;;) {
    std::set<std::vector<long>> seen;
    std::vector<Vector> pts;
    while (pts.size() < n) {
      std::vector<long> p(d);
      for (auto& x : p) x = coord(rng);
      if (!seen.insert(p).second) continue;
      Vector v;
      for (auto x : p) v.push_back(Scalar::integer(x));
      pts.push_back(std::move(v));
    }
    PointConfig s(FieldMode::kRational, d, std::move(pts));
    if (s.affine_dimension() == d) return s;
  }
}

PointConfig random_special_config(std::size_t d, std::size_t n, std::uint64_t seed) {
  if (d < 2 || n < d + 1) {
    throw PreconditionError("random_special_config requires d >= 2 and n >= d + 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-3, 3);
  std::uniform_int_distribution<long> step(-2, 2);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::vector<long>> pts;
    std::set<std::vector<long>> seen;
    auto add = [&](std::vector<long> p) {
      if (seen.insert(p).second) pts.push_back(std::move(p));
    };
    // Each new line passes through an existing point (or a fresh one for the
    // first line) and adds two more points along a random direction.
    while (pts.size() < n) {
      std::vector<long> base(d), dir(d);
      if (pts.empty()) {
        for (auto& x : base) x = coord(rng);
      } else {
        base = pts[rng() % pts.size()];
      }
      bool zero = true;
      for (auto& x : dir) {
        x = step(rng);
        zero = zero && x == 0;
      }
      if (zero) continue;
      add(base);
      for (long t : {1L, 2L}) {
        std::vector<long> p(d);
        for (std::size_t c = 0; c < d; ++c) p[c] = base[c] + t * dir[c];
        add(std::move(p));
      }
    }
    std::vector<Vector> v;
    for (const auto& p : pts) {
      Vector q;
      for (auto x : p) q.push_back(Scalar::integer(x));
      v.push_back(std::move(q));
    }
    PointConfig s(FieldMode::kRational, d, std::move(v));
    if (s.affine_dimension() == d) return s;
  }
  throw Error("no full-dimensional configuration with special structure found");
}

Matrix random_integer_matrix(std::size_t d, std::size_t n, long lo, long hi, std::uint64_t seed) {
  if (lo > hi) throw PreconditionError("empty entry range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(lo, hi);
  Matrix m(FieldMode::kRational, d, n);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar::integer(entry(rng));
  }
  return m;
}

Matrix random_rational_matrix(std::size_t d, std::size_t n, std::uint64_t seed, long range,
                              long max_den) {
  if (range < 0 || max_den < 1) throw PreconditionError("bad rational entry range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, max_den);
  Matrix m(FieldMode::kRational, d, n);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar::rational(mpq_class(num(rng), den(rng)));
  }
  return m;
}

Matrix random_unit_column_matrix(std::size_t d, std::size_t n, std::uint64_t seed) {
  if (d < 2) throw PreconditionError("unit columns need d >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) {
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
    cols.push_back(std::move(v));
  }
  return Matrix::from_columns(FieldMode::kRational, d, cols);
}

Matrix random_noncollinear_2xl(std::size_t l, std::uint64_t seed, long range) {
  if (range < 1) throw PreconditionError("entry range must be positive");
  std::size_t directions = 0;
  for (long x = -range; x <= range; ++x) {
    for (long y = -range; y <= range; ++y) {
      if (std::gcd(std::abs(x), std::abs(y)) == 1) ++directions;
    }
  }
  if (l > directions / 2) throw PreconditionError("too many columns for the entry range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-range, range);
  std::vector<std::pair<long, long>> cols;
  while (cols.size() < l) {
    long x = entry(rng), y = entry(rng);
    if (x == 0 && y == 0) continue;
    bool collinear = std::any_of(cols.begin(), cols.end(),
                                 [&](const auto& c) { return c.first * y - c.second * x == 0; });
    if (!collinear) cols.emplace_back(x, y);
  }
  std::vector<long> r0, r1;
  for (const auto& [x, y] : cols) {
    r0.push_back(x);
    r1.push_back(y);
  }
  return Matrix::from_integers({r0, r1});
}

}  // namespace kbound
