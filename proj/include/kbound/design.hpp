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
#include <vector>

#include "kbound/incidence.hpp"
#include "kbound/matrix.hpp"

namespace kbound {

// Measured (q, k, t) of a support pattern and the two rank lower bounds.
struct DesignCertificate {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t q = 0;  // max row support
  std::size_t k = 0;  // min column support
  std::size_t t = 0;  // max pairwise column-support intersection
  bool zero_column = false;
  mpq_class bound;      // n / (1 + t(q-1)/k)
  mpq_class old_bound;  // n - n t q (q-1) / k
  bool valid() const { return !zero_column && q >= 1 && k >= 1; }
};

DesignCertificate check_design(const Matrix& a);

struct SpecialLineDesign {
  Matrix a;
  // Smallest k_i over the points: other points on special lines through v_i.
  std::size_t min_k = 0;
  // True when every special line has an odd number of points, in which case
  // every column support equals 3 k_i.
  bool all_lines_odd = true;
};

// Rows are affine dependencies of collinear triples on special lines, so
// A [1 V] = 0. Throws Error("no special structure") when some point lies on
// no special line.
SpecialLineDesign build_special_line_design(const PointConfig& s);

// [1 V] as an n x (d+1) matrix.
Matrix affine_lift(const PointConfig& s);

struct ScalingOptions {
  double eps = 1e-9;
  std::size_t max_iter = 100000;
  // Accelerate rows that stay above their cap (see sinkhorn_scale).
  bool over_relax = true;
};

struct ScalingResult {
  Matrix b;  // complex_float, B_ij = A_ij rho_i gamma_j
  std::vector<double> rho;
  std::vector<double> gamma;
  double eps_achieved = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> row_sq_norms;
  std::vector<double> col_sq_norms;
};

// Alternating normalization on squared moduli: columns are scaled to squared
// norm 1, rows above row_cap are scaled down to it. With over_relax a row
// that is still above its cap after a step takes a step twice as long next
// time (in log scale); the factor resets once the row is within its cap.
// The returned B has exact unit columns; eps_achieved is the largest excess
// of a squared row norm over row_cap.
ScalingResult sinkhorn_scale(const Matrix& a, const mpq_class& row_cap,
                             const ScalingOptions& opts = {});

struct TransportationSolution {
  bool feasible = false;
  // Flow on each support edge (i, j), in the order of `support`.
  std::vector<mpq_class> z;
  mpq_class flow;
};

// Exact max-flow test for a nonnegative z on the support edges with row sums
// r and column sums c.
TransportationSolution transportation_feasible(
    std::size_t m, std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& support,
    const std::vector<mpq_class>& r, const std::vector<mpq_class>& c);

// Support edges of a matrix, row-major.
std::vector<std::pair<std::size_t, std::size_t>> support_edges(const Matrix& a);

struct DesignRankReport {
  DesignCertificate cert;
  std::size_t rank = 0;
  mpz_class required;  // ceil(bound)
  bool rank_pass = false;
  bool bound_above_old = false;
  // Scaled matrix diagnostics (reported).
  bool scaled = false;
  ScalingResult scaling;
  double trace = 0.0;
  double frob_sq = 0.0;
  double trace_bound = 0.0;  // Tr[M]^2 / |M|_F^2
  bool trace_pass = false;
  double offdiag = 0.0;
  double offdiag_bound = 0.0;  // t (1 - 1/q) alpha |B|_F^2
  bool offdiag_pass = false;
  bool pass() const { return rank_pass && bound_above_old && (!scaled || (trace_pass && offdiag_pass)); }
};

// rank(A) >= ceil(n / (1 + t(q-1)/k)), plus the trace and off-diagonal
// inequalities on the scaled Gram matrix. Throws PreconditionError for an
// invalid certificate.
DesignRankReport design_rank_check(const Matrix& a, const ScalingOptions& opts = {});

// Rows for every 3-subset of [n] and every position of the -2 entry.
Matrix all_triples_matrix(std::size_t n);

}  // namespace kbound
