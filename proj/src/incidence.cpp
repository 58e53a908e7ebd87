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

#include "kbound/incidence.hpp"

#include <algorithm>
#include <random>

namespace kbound {

namespace {

Vector diff(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool same_point(const Vector& a, const Vector& b, double tol) {
  if (tol == 0.0) return a == b;
  double scale = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    scale = std::max({scale, a[i].magnitude(), b[i].magnitude()});
  }
  return is_zero_vector(diff(a, b), tol, scale);
}

}  // namespace

PointConfig::PointConfig(FieldMode mode, std::size_t dim, std::vector<Vector> points, double tol)
    : mode_(mode), dim_(dim), points_(std::move(points)) {
  if (is_exact(mode)) {
    tol_ = 0.0;
  } else {
    tol_ = tol < 0.0 ? kDefaultCollinearTol : tol;
    if (tol_ == 0.0) throw PreconditionError("complex_float point sets require tol > 0");
  }
  for (const auto& p : points_) {
    if (p.size() != dim_) throw PreconditionError("point has the wrong dimension");
    for (const auto& x : p) {
      if (x.mode() != mode_) throw FieldMismatch("point coordinate has the wrong field mode");
    }
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (same_point(points_[i], points_[j], tol_)) {
        throw PreconditionError("duplicate points " + std::to_string(i) + " and " +
                                std::to_string(j));
      }
    }
  }
  if (points_.size() > 1) {
    std::vector<Vector> rows;
    for (std::size_t i = 1; i < points_.size(); ++i) rows.push_back(diff(points_[i], points_[0]));
    affine_dim_ = rank(Matrix::from_rows(mode_, rows, exact() ? -1.0 : tol_));
  }
}

Matrix PointConfig::as_columns() const {
  return Matrix::from_columns(mode_, dim_, points_, exact() ? -1.0 : tol_);
}

std::size_t LineSet::ordinary_count() const {
  return static_cast<std::size_t>(
      std::count_if(lines.begin(), lines.end(), [](const Line& l) { return l.ordinary(); }));
}

std::size_t LineSet::special_count() const { return lines.size() - ordinary_count(); }

LineSet lines(const PointConfig& s) {
  const std::size_t n = s.size();
  if (n < 2) throw PreconditionError("lines requires at least two points");
  LineSet out;
  out.point_to_lines.resize(n);
  std::vector<std::vector<bool>> covered(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (covered[i][j]) continue;
      Vector dir = diff(s.point(j), s.point(i));
      Line line;
      line.members = {i, j};
      for (std::size_t k = j + 1; k < n; ++k) {
        if (parallel(dir, diff(s.point(k), s.point(i)), s.tol())) line.members.push_back(k);
      }
      for (auto a : line.members) {
        for (auto b : line.members) covered[a][b] = true;
      }
      line.direction = normalize_leading(std::move(dir), s.tol());
      std::size_t id = out.lines.size();
      for (auto a : line.members) out.point_to_lines[a].push_back(id);
      out.lines.push_back(std::move(line));
    }
  }
  return out;
}

std::vector<PointLineStats> classify(const PointConfig& s, const LineSet& ls) {
  std::vector<PointLineStats> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto& st = out[i];
    for (auto id : ls.point_to_lines[i]) {
      const Line& l = ls.lines[id];
      ++st.lines;
      if (!l.ordinary()) {
        ++st.special_lines;
        st.k += l.members.size() - 1;
      }
    }
    if (s.size() - 1 + st.special_lines != st.k + st.lines) {
      throw BoundViolation("line count identity fails at point " + std::to_string(i));
    }
  }
  return out;
}

MaxLines maxlines(const LineSet& ls) {
  MaxLines best;
  for (std::size_t i = 0; i < ls.point_to_lines.size(); ++i) {
    if (ls.point_to_lines[i].size() > best.count) best = {i, ls.point_to_lines[i].size()};
  }
  return best;
}

MaxLines maxlines(const PointConfig& s) { return maxlines(lines(s)); }

PointConfig reduce_to_affine_span(const PointConfig& s) {
  if (s.size() == 0) return s;
  std::vector<Vector> rows;
  for (std::size_t i = 1; i < s.size(); ++i) rows.push_back(diff(s.point(i), s.point(0)));
  double tol = s.exact() ? -1.0 : s.tol();
  IndexList coords;
  if (!rows.empty()) coords = rref(Matrix::from_rows(s.mode(), rows, tol)).pivot_cols;
  // Projection onto the pivot coordinates is injective on the span of the
  // differences.
  std::vector<Vector> pts;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Vector d = diff(s.point(i), s.point(0));
    Vector p;
    for (auto c : coords) p.push_back(d[c]);
    pts.push_back(std::move(p));
  }
  return PointConfig(s.mode(), coords.size(), std::move(pts), s.exact() ? -1.0 : s.tol());
}

PointConfig generic_project_to_plane(const PointConfig& s, std::uint64_t seed) {
  if (s.affine_dimension() < 2) {
    throw PreconditionError("generic projection requires affine dimension >= 2");
  }
  if (s.dim() == 2) return s;
  LineSet original = lines(s);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-1000000, 1000000);
  for (int attempt = 0; attempt < 10; ++attempt) {
    std::vector<Vector> map(2, Vector(s.dim()));
    for (auto& row : map) {
      for (auto& x : row) x = Scalar::from_rational(s.mode(), mpq_class(coef(rng)));
    }
    std::vector<Vector> pts;
    for (const auto& p : s.points()) {
      Vector q(2, Scalar::zero(s.mode()));
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < s.dim(); ++c) q[r] += map[r][c] * p[c];
      }
      pts.push_back(std::move(q));
    }
    try {
      PointConfig projected(s.mode(), 2, std::move(pts), s.exact() ? -1.0 : s.tol());
      LineSet after = lines(projected);
      bool same = after.lines.size() == original.lines.size();
      for (std::size_t i = 0; same && i < after.lines.size(); ++i) {
        same = after.lines[i].members == original.lines[i].members;
      }
      if (same) return projected;
    } catch (const PreconditionError&) {
      // Two points collapsed; resample.
    }
  }
  throw Error("projection not generic after 10 attempts");
}

mpq_class f_lower_bound(std::size_t d) {
  if (d < 2) throw PreconditionError("f(d) is defined for d >= 2");
  mpq_class improved = 1 - mpq_class(4, static_cast<unsigned long>(d + 1));
  improved.canonicalize();
  mpq_class third(1, 3);
  return improved > third ? improved : third;
}

MaxlinesReport check_maxlines_bounds(const PointConfig& s) {
  MaxlinesReport rep;
  rep.n = s.size();
  rep.d = s.dim();
  if (s.dim() < 2) {
    rep.note = "ambient dimension below 2";
    return rep;
  }
  if (s.affine_dimension() != s.dim()) {
    rep.note = "affine dimension " + std::to_string(s.affine_dimension()) +
               " differs from ambient dimension; reduce first";
    return rep;
  }
  rep.applicable = true;
  rep.observed = maxlines(s);
  rep.planar_bound = mpz_class(static_cast<unsigned long>(rep.n / 3 + 1));
  rep.improved_bound = (1 - mpq_class(4, static_cast<unsigned long>(rep.d + 1))) *
                       mpq_class(static_cast<unsigned long>(rep.n));
  rep.improved_bound.canonicalize();
  mpz_class observed(static_cast<unsigned long>(rep.observed.count));
  rep.planar_pass = observed >= rep.planar_bound;
  rep.improved_pass = mpq_class(observed) >= rep.improved_bound;
  return rep;
}

}  // namespace kbound
