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

using IntVector = std::vector<std::int64_t>;

// Desk-scale guard for graver_basis.
inline constexpr std::size_t kGraverMaxRows = 3;
inline constexpr std::size_t kGraverMaxCols = 6;
inline constexpr long kGraverMaxEntry = 50;
// Completion gives up once this many elements have been collected.
inline constexpr std::size_t kGraverElementCutoff = 20000;

// u conformally below v: |u_i| <= |v_i| and u_i v_i >= 0 for every i.
bool conformal_leq(const IntVector& u, const IntVector& v);

// Integer basis of the lattice ker(A) cap Z^n, from a unimodular row
// reduction of [A^T | I]. A must be an integer matrix.
std::vector<IntVector> lattice_kernel_basis(const Matrix& a);

struct GraverBasis {
  std::vector<IntVector> elements;  // sorted lexicographically, closed under negation
  std::int64_t g_inf = 0;           // 0 when ker(A) cap Z^n = {0}
  std::size_t generators = 0;       // size of the starting symmetric set
  std::size_t reductions = 0;       // pair sums reduced during completion
};

// Completion from a lattice basis: close under sums of non sign-compatible
// pairs, reducing each sum by conformal normal form, then keep the
// conformally minimal elements. Guard: d <= 3, n <= 6, |a_ij| <= 50.
GraverBasis graver_basis(const Matrix& a);

struct KappaGraverReport {
  double kappa = 1.0;
  mpq_class kappa_sq;
  std::int64_t g_inf = 0;
  bool pass = false;  // kappa <= g_inf, compared exactly as kappa^2 <= g_inf^2
};

KappaGraverReport kappa_vs_graver_check(const Matrix& a);

struct CollinearBlockReport {
  std::size_t k = 0;
  // Entries left after dropping -z_j whenever z_i = -z_j.
  std::vector<long> deduplicated;
  // max ||v^(i)||_inf over the two-element kernel vectors anchored at the
  // least deduplicated entry.
  std::int64_t pair_max = 0;
  std::int64_t g_inf = 0;
  std::int64_t bound = 0;  // 2 g_inf^2 + 2
  bool pass = false;       // k <= bound
};

// Takes the 1 x k row z, whose columns are distinct and collinear.
CollinearBlockReport collinear_block_check(const std::vector<long>& z);

// min c^T x subject to Ax = b, 0 <= x <= u, x integral.
struct IPInstance {
  Matrix a;  // rational mode, integer entries
  std::vector<mpz_class> b;
  std::vector<mpz_class> u;
  std::vector<mpq_class> c;

  std::size_t rows() const { return a.rows(); }
  std::size_t cols() const { return a.cols(); }
  // Throws PreconditionError on shape mismatch, non-integer A or u < 0.
  void validate() const;
};

// A feasible bounded IP: entries of A in [-3, 4], u_j in [0, 3], c_j in
// [-5, 5], and b = A x0 for a random 0 <= x0 <= u. With duplicate_column the
// last column of A repeats the first.
IPInstance random_ip_instance(std::size_t d, std::size_t n, std::uint64_t seed, bool duplicate_column = false);

struct SeparableReduction {
  // Groups of identical columns ordered by first appearance; each group is
  // sorted by cost ascending (ties by index).
  std::vector<IndexList> groups;
  Matrix a_prime;
  std::vector<mpz_class> u_prime;
  // breakpoints[i][j] = S_i(j), with S_i(0) = 0.
  std::vector<std::vector<mpz_class>> breakpoints;
  std::vector<std::vector<mpq_class>> sorted_costs;
  std::size_t n = 0;

  std::size_t r() const { return groups.size(); }
  // The reduced instance: A' x = b, 0 <= x <= u'. Costs are left at zero;
  // the reduced objective is separable piecewise linear.
  IPInstance reduced(const IPInstance& ip) const;
};

SeparableReduction separable_reduce(const IPInstance& ip);

// Fills each group in cost order: index i_j gets 0 when x_i <= S_i(j-1),
// x_i - S_i(j-1) when x_i lies in (S_i(j-1), S_i(j)], and u_{i_j} above.
// Throws PreconditionError if x' is outside [0, u'].
std::vector<mpq_class> g_map(const std::vector<mpq_class>& x_prime, const SeparableReduction& red);

// Sums x over each group.
std::vector<mpq_class> aggregate(const std::vector<mpq_class>& x, const SeparableReduction& red);

struct LPSolution {
  std::vector<mpq_class> x;
  mpq_class value;
  std::size_t vertices_checked = 0;
};

// Exact LP optimum by enumerating basic feasible points; the
// lexicographically least optimal vertex is returned. Requires n <= 6.
// Throws Infeasible.
LPSolution solve_lp_exact(const IPInstance& ip);

inline constexpr std::uint64_t kMaxIpBox = 1000000;

struct IPSolution {
  std::vector<mpz_class> x;
  mpq_class distance;  // ||x - anchor||_inf
  std::uint64_t points_checked = 0;
};

// Feasible integer point nearest to anchor in the l_inf norm, ties broken
// lexicographically. Requires n <= 6 and prod(u_i + 1) <= 1e6. Throws
// Infeasible.
IPSolution solve_ip_bruteforce(const IPInstance& ip, const std::vector<mpq_class>& anchor);

mpq_class linf_distance(const std::vector<mpq_class>& x, const std::vector<mpq_class>& y);

struct ProximityReport {
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<mpq_class> x_lp_prime;
  std::vector<mpq_class> x_ip_prime;
  std::vector<mpq_class> x_lp;  // g(x_lp_prime)
  std::vector<mpq_class> x_ip;  // nearest feasible integer point to x_lp
  std::vector<mpq_class> g_x_ip_prime;
  mpq_class lp_value;
  mpq_class g_lp_value;  // c^T g(x_lp_prime), equals lp_value
  mpq_class proximity;   // ||x_lp - x_ip||_inf
  mpq_class g_gap;       // ||g(x_lp_prime) - g(x_ip_prime)||_inf
  mpq_class prime_gap;   // ||x_lp_prime - x_ip_prime||_inf
  std::int64_t g_inf_a = 0;
  std::int64_t g_inf_a_prime = 0;
  std::int64_t hemmecke_bound = 0;  // r g_inf(A')
  mpz_class envelope;               // d^4 g_inf(A)^4, reported only
  // Distinct-column count against the stated d^4 g_inf(A)^3 (reported only).
  mpz_class distinct_column_envelope;
  // Witness index i_j of g_gap, its group position j, the intervals j' and
  // j'' holding the larger and smaller of the two reduced coordinates, and
  // the resulting case 1..4 (0 when both values coincide).
  std::size_t witness = 0;
  std::size_t witness_j = 0;
  std::size_t witness_j_hi = 0;
  std::size_t witness_j_lo = 0;
  int witness_case = 0;
  // Per-index g-map bound |g(x)_ij - g(y)_ij| <= |x_i - y_i| at every index.
  bool gmap_monotone = false;
  bool lp_value_matches = false;
  bool chain_pass = false;     // proximity <= g_gap <= prime_gap
  bool hemmecke_pass = false;  // prime_gap <= r g_inf(A')
  bool pass() const { return lp_value_matches && gmap_monotone && chain_pass && hemmecke_pass; }
};

ProximityReport proximity_experiment(const IPInstance& ip);

}  // namespace kbound
