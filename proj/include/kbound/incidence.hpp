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
#include <string>
#include <vector>

#include "kbound/matrix.hpp"

namespace kbound {

inline constexpr double kDefaultCollinearTol = 1e-9;

// n distinct points in field^dim.
class PointConfig {
 public:
  PointConfig() = default;
  // Throws on ragged input, mixed modes or duplicate points.
  PointConfig(FieldMode mode, std::size_t dim, std::vector<Vector> points, double tol = -1.0);

  FieldMode mode() const { return mode_; }
  bool exact() const { return is_exact(mode_); }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  double tol() const { return tol_; }
  const std::vector<Vector>& points() const { return points_; }
  const Vector& point(std::size_t i) const { return points_[i]; }
  std::size_t affine_dimension() const { return affine_dim_; }

  // Points as the columns of a dim x n matrix.
  Matrix as_columns() const;

 private:
  FieldMode mode_ = FieldMode::kRational;
  std::size_t dim_ = 0;
  std::vector<Vector> points_;
  double tol_ = 0.0;
  std::size_t affine_dim_ = 0;
};

struct Line {
  IndexList members;  // sorted
  Vector direction;   // members[1] - members[0], leading entry 1
  bool ordinary() const { return members.size() == 2; }
};

struct LineSet {
  std::vector<Line> lines;
  std::vector<IndexList> point_to_lines;
  std::size_t ordinary_count() const;
  std::size_t special_count() const;
};

// Every maximal collinear subset of size >= 2, ordered by the least pair
// they contain.
LineSet lines(const PointConfig& s);

// Per-point counts: lines through v_i, special lines through v_i, and the
// number of other points on special lines through v_i.
struct PointLineStats {
  std::size_t lines = 0;
  std::size_t special_lines = 0;
  std::size_t k = 0;
};
std::vector<PointLineStats> classify(const PointConfig& s, const LineSet& ls);

struct MaxLines {
  std::size_t point = 0;
  std::size_t count = 0;
};
// Least index attaining the maximum.
MaxLines maxlines(const LineSet& ls);
MaxLines maxlines(const PointConfig& s);

// Re-expresses S in coordinates of its affine span (translated so the first
// point is the origin). Affine dependencies are preserved exactly.
PointConfig reduce_to_affine_span(const PointConfig& s);

// Random integer linear map to the plane, resampled until the line set and
// point distinctness are preserved. Throws PreconditionError if affine
// dimension < 2 and Error("projection not generic") after 10 failures.
PointConfig generic_project_to_plane(const PointConfig& s, std::uint64_t seed);

// max(1/3, 1 - 4/(d+1)).
mpq_class f_lower_bound(std::size_t d);

struct MaxlinesReport {
  bool applicable = false;
  std::string note;
  std::size_t n = 0;
  std::size_t d = 0;
  MaxLines observed;
  mpz_class planar_bound;     // floor(n/3) + 1
  mpq_class improved_bound;   // (1 - 4/(d+1)) n
  bool planar_pass = true;
  bool improved_pass = true;
  bool pass() const { return !applicable || (planar_pass && improved_pass); }
};

// Both lower bounds on maxlines. Skipped (applicable = false) unless the
// affine dimension equals the ambient dimension and d >= 2.
MaxlinesReport check_maxlines_bounds(const PointConfig& s);

}  // namespace kbound
