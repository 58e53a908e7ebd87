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

#include "kbound/graver.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "kbound/condition.hpp"
#include "test_util.hpp"

namespace kbound {
namespace {

using testing::ints;

// Conformally minimal nonzero kernel vectors inside [-bound, bound]^n.
std::vector<IntVector> box_graver(const Matrix& a, std::int64_t bound) {
  const std::size_t n = a.cols();
  std::vector<IntVector> kernel;
  IntVector x(n, -bound);
  while (true) {
    bool zero = true, in_kernel = true;
    for (auto v : x) zero = zero && v == 0;
    for (std::size_t i = 0; i < a.rows() && in_kernel; ++i) {
      mpz_class s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a(i, j).as_rational().get_num() * x[j];
      in_kernel = s == 0;
    }
    if (!zero && in_kernel) kernel.push_back(x);
    std::size_t j = n;
    while (j > 0 && x[j - 1] == bound) x[--j] = -bound;
    if (j == 0) break;
    ++x[j - 1];
  }
  std::vector<IntVector> out;
  for (const auto& v : kernel) {
    bool minimal = true;
    for (const auto& w : kernel) {
      if (w != v && conformal_leq(w, v)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void expect_matches_oracle(const Matrix& a) {
  GraverBasis gb = graver_basis(a);
  std::int64_t side = 2 * (gb.g_inf + 1) + 1;
  std::int64_t points = 1;
  for (std::size_t j = 0; j < a.cols(); ++j) points *= side;
  ASSERT_LE(points, 3000000) << "oracle box too large";
  EXPECT_EQ(gb.elements, box_graver(a, gb.g_inf + 1));
}

IPInstance make_ip(const std::vector<std::vector<long>>& a, std::vector<long> b,
                   std::vector<long> u, std::vector<long> c) {
  IPInstance ip;
  ip.a = ints(a);
  for (auto v : b) ip.b.emplace_back(v);
  for (auto v : u) ip.u.emplace_back(v);
  for (auto v : c) ip.c.emplace_back(v);
  return ip;
}

std::vector<mpq_class> qv(std::vector<mpq_class> v) {
  for (auto& x : v) x.canonicalize();
  return v;
}

TEST(ConformalTest, Order) {
  EXPECT_TRUE(conformal_leq({1, 0, -1}, {2, 0, -1}));
  EXPECT_FALSE(conformal_leq({1, 0, -1}, {2, 0, 1}));
  EXPECT_FALSE(conformal_leq({2, 0}, {1, 0}));
  EXPECT_TRUE(conformal_leq({0, 0}, {5, -3}));
}

TEST(LatticeKernelTest, SpansIntegerKernel) {
  auto basis = lattice_kernel_basis(ints({{2, 3}}));
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(std::abs(basis[0][0]), 3);
  EXPECT_EQ(std::abs(basis[0][1]), 2);
  // ker of [2 2] contains (1,-1), which a rational basis scaled by 2 would miss.
  basis = lattice_kernel_basis(ints({{2, 2}}));
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(std::abs(basis[0][0]), 1);
  EXPECT_TRUE(lattice_kernel_basis(ints({{1, 0}, {0, 1}})).empty());
}

TEST(GraverTest, AllOnesRow) {
  GraverBasis gb = graver_basis(ints({{1, 1, 1}}));
  std::vector<IntVector> want = {{-1, 0, 1}, {-1, 1, 0}, {0, -1, 1}, {0, 1, -1}, {1, -1, 0}, {1, 0, -1}};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(gb.elements, want);
  EXPECT_EQ(gb.g_inf, 1);
  EXPECT_EQ(gb.elements, box_graver(ints({{1, 1, 1}}), 2));
}

TEST(GraverTest, SingleLineKernels) {
  GraverBasis gb = graver_basis(ints({{1, 2}}));
  EXPECT_EQ(gb.elements, (std::vector<IntVector>{{-2, 1}, {2, -1}}));
  EXPECT_EQ(gb.g_inf, 2);
  gb = graver_basis(ints({{2, 3}}));
  EXPECT_EQ(gb.elements, (std::vector<IntVector>{{-3, 2}, {3, -2}}));
  EXPECT_EQ(gb.g_inf, 3);
}

TEST(GraverTest, TrivialKernel) {
  GraverBasis gb = graver_basis(ints({{1, 0}, {0, 1}}));
  EXPECT_TRUE(gb.elements.empty());
  EXPECT_EQ(gb.g_inf, 0);
}

TEST(GraverTest, Guards) {
  EXPECT_THROW(graver_basis(ints({{1, 1, 1, 1, 1, 1, 1}})), GuardExceeded);
  EXPECT_THROW(graver_basis(ints({{1}, {1}, {1}, {1}})), GuardExceeded);
  EXPECT_THROW(graver_basis(ints({{51, 1}})), GuardExceeded);
  EXPECT_THROW(graver_basis(Matrix::from_rows(FieldMode::kRational, {{testing::q("1/2"), testing::z(1)}})),
               PreconditionError);
}

TEST(GraverTest, OracleOnFixedInstances) {
  for (const auto& rows : std::vector<std::vector<std::vector<long>>>{
           {{1, 1, 1}},
           {{1, 2, 3}},
           {{1, 2, 3, 4}},
           {{1, 0, 1}, {0, 1, 1}},
           {{1, 0, 2}, {0, 1, 1}},
           {{1, 1, 1, 1}, {0, 1, 2, 3}},
           {{2, -1, 0, 3}},
           {{1, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}},
       }) {
    SCOPED_TRACE(ints(rows).rows());
    expect_matches_oracle(ints(rows));
  }
}

TEST(GraverTest, InvariantsAndOracleOnRandomMatrices) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = 1 + trial % 2;
    std::size_t n = d + 1 + trial % 3;
    std::vector<std::vector<long>> rows(d, std::vector<long>(n));
    for (auto& r : rows)
      for (auto& x : r) x = entry(rng);
    Matrix a = ints(rows);
    GraverBasis gb = graver_basis(a);
    std::set<IntVector> elems(gb.elements.begin(), gb.elements.end());
    for (const auto& v : gb.elements) {
      IntVector neg(v);
      for (auto& x : neg) x = -x;
      EXPECT_TRUE(elems.count(neg));
      Vector vs;
      for (auto x : v) vs.push_back(Scalar::integer(x));
      for (const auto& s : a * vs) EXPECT_TRUE(s.is_zero());
    }
    std::int64_t side = 2 * (gb.g_inf + 1) + 1;
    std::int64_t points = 1;
    for (std::size_t j = 0; j < n; ++j) points *= side;
    if (points <= 3000000) EXPECT_EQ(gb.elements, box_graver(a, gb.g_inf + 1));
  }
}

TEST(KappaGraverTest, Examples) {
  auto r = kappa_vs_graver_check(ints({{1, 2}}));
  EXPECT_EQ(r.kappa_sq, 4);
  EXPECT_EQ(r.g_inf, 2);
  EXPECT_TRUE(r.pass);
  r = kappa_vs_graver_check(ints({{1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(r.kappa_sq, 1);
  EXPECT_EQ(r.g_inf, 1);
  EXPECT_TRUE(r.pass);
  r = kappa_vs_graver_check(ints({{1, 0, 2}, {0, 1, 1}}));
  EXPECT_EQ(r.kappa_sq, 4);
  EXPECT_GE(r.g_inf, 2);
  EXPECT_TRUE(r.pass);
}

TEST(KappaGraverTest, RandomSmallIntegerMatrices) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t d = 1 + trial % 3;
    std::size_t n = d + 1 + trial % 2;
    std::vector<std::vector<long>> rows(d, std::vector<long>(n));
    for (auto& r : rows)
      for (auto& x : r) x = entry(rng);
    EXPECT_TRUE(kappa_vs_graver_check(ints(rows)).pass);
  }
}

TEST(CollinearBlockTest, Examples) {
  auto r = collinear_block_check({1, 2});
  EXPECT_GE(r.g_inf, 2);
  EXPECT_EQ(r.bound, 10);
  EXPECT_TRUE(r.pass);
  r = collinear_block_check({1, 2, 3, 4});
  EXPECT_TRUE(r.pass);
  std::int64_t oracle = 0;
  for (const auto& v : box_graver(ints({{1, 2, 3, 4}}), r.g_inf + 1))
    for (auto x : v) oracle = std::max<std::int64_t>(oracle, std::abs(x));
  EXPECT_EQ(r.g_inf, oracle);
  r = collinear_block_check({1, -1});
  EXPECT_EQ(r.deduplicated, (std::vector<long>{-1}));
  EXPECT_EQ(r.pair_max, 0);
  EXPECT_TRUE(r.pass);
  EXPECT_THROW(collinear_block_check({1}), PreconditionError);
  EXPECT_THROW(collinear_block_check({1, 1}), PreconditionError);
  EXPECT_THROW(collinear_block_check({0, 1}), PreconditionError);
}

TEST(CollinearBlockTest, RandomBlocks) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> entry(-12, 12);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t k = 2 + trial % 4;
    std::set<long> vals;
    while (vals.size() < k) {
      long v = entry(rng);
      if (v != 0) vals.insert(v);
    }
    std::vector<long> z(vals.begin(), vals.end());
    std::shuffle(z.begin(), z.end(), rng);
    auto r = collinear_block_check(z);
    EXPECT_TRUE(r.pass);
    EXPECT_LE(r.pair_max, r.g_inf);
    EXPECT_GE(2 * r.deduplicated.size(), r.k);
  }
}

TEST(SeparableTest, IdentityWithoutDuplicates) {
  IPInstance ip = make_ip({{2, 3}}, {4}, {2, 2}, {1, 0});
  auto red = separable_reduce(ip);
  EXPECT_EQ(red.r(), 2u);
  EXPECT_EQ(red.a_prime, ip.a);
  std::vector<mpq_class> x = qv({mpq_class(1, 2), mpq_class(7, 5)});
  EXPECT_EQ(g_map(x, red), x);
}

TEST(SeparableTest, DuplicatedColumnsExample) {
  IPInstance ip = make_ip({{1, 1}}, {4}, {2, 3}, {5, 1});
  auto red = separable_reduce(ip);
  ASSERT_EQ(red.r(), 1u);
  EXPECT_EQ(red.groups[0], (IndexList{1, 0}));
  EXPECT_EQ(red.sorted_costs[0], (std::vector<mpq_class>{1, 5}));
  EXPECT_EQ(red.breakpoints[0], (std::vector<mpz_class>{0, 3, 5}));
  EXPECT_EQ(red.u_prime[0], 5);
  EXPECT_EQ(g_map({mpq_class(4)}, red), (std::vector<mpq_class>{1, 3}));
  EXPECT_EQ(g_map({mpq_class(0)}, red), (std::vector<mpq_class>{0, 0}));
  EXPECT_THROW(g_map({mpq_class(6)}, red), PreconditionError);
  EXPECT_THROW(g_map({mpq_class(-1)}, red), PreconditionError);
}

TEST(SeparableTest, GMapFeasibilityOnRandomPoints) {
  IPInstance ip = make_ip({{1, 2, 1, 2, 1}, {0, 1, 0, 1, 0}}, {0, 0}, {2, 1, 3, 4, 1}, {3, 1, -1, 2, 0});
  auto red = separable_reduce(ip);
  ASSERT_EQ(red.r(), 2u);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<mpq_class> x(red.r());
    for (std::size_t i = 0; i < red.r(); ++i) {
      long den = 1 + static_cast<long>(rng() % 7);
      long top = red.u_prime[i].get_si() * den;
      x[i] = mpq_class(static_cast<long>(rng() % (top + 1)), den);
      x[i].canonicalize();
    }
    auto y = g_map(x, red);
    EXPECT_EQ(aggregate(y, red), x);
    for (std::size_t j = 0; j < y.size(); ++j) {
      EXPECT_GE(y[j], 0);
      EXPECT_LE(y[j], ip.u[j]);
    }
    for (std::size_t i = 0; i < ip.rows(); ++i) {
      mpq_class lhs = 0, rhs = 0;
      for (std::size_t j = 0; j < ip.cols(); ++j) lhs += ip.a(i, j).as_rational() * y[j];
      for (std::size_t k = 0; k < red.r(); ++k) rhs += red.a_prime(i, k).as_rational() * x[k];
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(LPTest, WitnessInstance) {
  IPInstance ip = make_ip({{2, 3}}, {4}, {2, 2}, {1, 0});
  auto lp = solve_lp_exact(ip);
  EXPECT_EQ(lp.x, qv({mpq_class(0), mpq_class(4, 3)}));
  EXPECT_EQ(lp.value, 0);
  auto sol = solve_ip_bruteforce(ip, lp.x);
  EXPECT_EQ(sol.x, (std::vector<mpz_class>{2, 0}));
  EXPECT_EQ(sol.distance, 2);
}

TEST(LPTest, Infeasible) {
  IPInstance ip = make_ip({{2, 3}}, {20}, {2, 2}, {1, 0});
  EXPECT_THROW(solve_lp_exact(ip), Infeasible);
  EXPECT_THROW(solve_ip_bruteforce(ip, {0, 0}), Infeasible);
  // LP-feasible but without integer points.
  IPInstance odd = make_ip({{2, 2}}, {1}, {1, 1}, {0, 0});
  EXPECT_NO_THROW(solve_lp_exact(odd));
  EXPECT_THROW(solve_ip_bruteforce(odd, {0, 0}), Infeasible);
  IPInstance inconsistent = make_ip({{1, 1}, {1, 1}}, {1, 2}, {3, 3}, {0, 0});
  EXPECT_THROW(solve_lp_exact(inconsistent), Infeasible);
}

TEST(LPTest, BoxGuard) {
  IPInstance ip = make_ip({{1, 1, 1}}, {1}, {200, 200, 200}, {0, 0, 0});
  EXPECT_THROW(solve_ip_bruteforce(ip, {0, 0, 0}), GuardExceeded);
}

TEST(LPTest, LexicographicTieBreak) {
  // Every point of x1 + x2 = 1 is optimal; the least vertex is (0, 1).
  IPInstance ip = make_ip({{1, 1}}, {1}, {1, 1}, {0, 0});
  EXPECT_EQ(solve_lp_exact(ip).x, (std::vector<mpq_class>{0, 1}));
  // Both (0,1) and (1,0) are at distance 1/2 from (1/2,1/2).
  auto sol = solve_ip_bruteforce(ip, qv({mpq_class(1, 2), mpq_class(1, 2)}));
  EXPECT_EQ(sol.x, (std::vector<mpz_class>{0, 1}));
}

// The LP optimum is feasible and no worse than any feasible integer point;
// on totally unimodular instances it equals the integer optimum.
TEST(LPTest, AgainstIntegerPoints) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> entry(-2, 3), bound(0, 3), cost(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    bool tu = trial % 3 == 0;
    std::size_t d = 1 + trial % 2;
    std::size_t n = 3 + trial % 2;
    std::vector<std::vector<long>> rows(d, std::vector<long>(n));
    for (auto& r : rows)
      for (auto& x : r) x = entry(rng);
    if (tu) rows = {{1, 1, 0, 0}, {0, 1, 1, 1}};
    n = rows[0].size();
    std::vector<long> u(n), c(n), x0(n), b(rows.size(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      u[j] = bound(rng);
      c[j] = cost(rng);
      x0[j] = u[j] == 0 ? 0 : static_cast<long>(rng() % (u[j] + 1));
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) b[i] += rows[i][j] * x0[j];
    IPInstance ip = make_ip(rows, b, u, c);
    auto lp = solve_lp_exact(ip);
    for (std::size_t i = 0; i < ip.rows(); ++i) {
      mpq_class s = 0;
      for (std::size_t j = 0; j < n; ++j) s += ip.a(i, j).as_rational() * lp.x[j];
      EXPECT_EQ(s, ip.b[i]);
    }
    mpq_class best_int;
    bool have = false;
    std::vector<long> x(n, 0);
    while (true) {
      bool feas = true;
      for (std::size_t i = 0; i < rows.size() && feas; ++i) {
        long s = 0;
        for (std::size_t j = 0; j < n; ++j) s += rows[i][j] * x[j];
        feas = s == b[i];
      }
      if (feas) {
        mpq_class v = 0;
        for (std::size_t j = 0; j < n; ++j) v += c[j] * x[j];
        EXPECT_LE(lp.value, v);
        if (!have || v < best_int) best_int = v;
        have = true;
      }
      std::size_t j = n;
      while (j > 0 && x[j - 1] == u[j - 1]) x[--j] = 0;
      if (j == 0) break;
      ++x[j - 1];
    }
    ASSERT_TRUE(have);
    if (tu) EXPECT_EQ(lp.value, best_int);
  }
}

TEST(ProximityTest, WitnessInstance) {
  auto rep = proximity_experiment(make_ip({{2, 3}}, {4}, {2, 2}, {1, 0}));
  EXPECT_EQ(rep.r, 2u);
  EXPECT_EQ(rep.proximity, 2);
  EXPECT_EQ(rep.prime_gap, 2);
  EXPECT_EQ(rep.g_inf_a_prime, 3);
  EXPECT_EQ(rep.hemmecke_bound, 6);
  EXPECT_EQ(rep.envelope, 81);
  EXPECT_TRUE(rep.pass());
}

TEST(ProximityTest, TotallyUnimodularIsIntegral) {
  auto rep = proximity_experiment(make_ip({{1, 1, 0}, {0, 1, 1}}, {2, 3}, {2, 2, 2}, {1, -1, 2}));
  EXPECT_LT(rep.proximity, 1);
  EXPECT_EQ(rep.proximity, 0);
  EXPECT_TRUE(rep.pass());
}

TEST(ProximityTest, DuplicatedColumnsCase) {
  // Columns 0, 1, 3 coincide; the g-map fills them in cost order.
  auto rep = proximity_experiment(make_ip({{2, 2, 3, 2}}, {7}, {1, 2, 1, 1}, {3, -1, 1, 0}));
  EXPECT_EQ(rep.r, 2u);
  EXPECT_TRUE(rep.lp_value_matches);
  EXPECT_TRUE(rep.gmap_monotone);
  EXPECT_TRUE(rep.pass());
  if (rep.g_gap > 0) {
    EXPECT_GE(rep.witness_case, 1);
    EXPECT_LE(rep.witness_case, 4);
  }
}

TEST(ProximityTest, ChainOnRandomInstances) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> entry(-3, 4), bound(0, 3), cost(-5, 5);
  std::set<int> cases;
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t d = 1 + trial % 2;
    std::size_t n = 3 + trial % 3;
    std::vector<std::vector<long>> rows(d, std::vector<long>(n));
    for (auto& r : rows)
      for (auto& x : r) x = entry(rng);
    // Duplicate a column in half the instances.
    if (trial % 2 == 0) {
      for (auto& r : rows) r[n - 1] = r[0];
    }
    std::vector<long> u(n), c(n), x0(n), b(d, 0);
    for (std::size_t j = 0; j < n; ++j) {
      u[j] = bound(rng);
      c[j] = cost(rng);
      x0[j] = static_cast<long>(rng() % (u[j] + 1));
    }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i] += rows[i][j] * x0[j];
    auto rep = proximity_experiment(make_ip(rows, b, u, c));
    EXPECT_TRUE(rep.pass()) << "trial " << trial;
    EXPECT_LE(rep.proximity, rep.prime_gap);
    cases.insert(rep.witness_case);
  }
  EXPECT_GE(cases.size(), 2u);
}

}  // namespace
}  // namespace kbound
