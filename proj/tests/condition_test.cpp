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

#include "kbound/condition.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kbound/generators.hpp"
#include "test_util.hpp"

namespace kbound {
namespace {

using testing::ints;
using testing::q;
using testing::z;

TEST(CircuitsTest, SingleCircuit) {
  auto cs = circuits(ints({{1, 0, 2}, {0, 1, 1}}));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].support, (IndexList{0, 1, 2}));
  // Proportional to (2, 1, -1).
  EXPECT_EQ(cs[0].coeffs, (Vector{q("1"), q("1/2"), q("-1/2")}));
}

TEST(CircuitsTest, IdentityHasNone) {
  EXPECT_TRUE(circuits(Matrix::identity(FieldMode::kRational, 3)).empty());
}

TEST(CircuitsTest, AllPairsOfARow) {
  auto cs = circuits(ints({{1, 1, 1}}));
  ASSERT_EQ(cs.size(), 3u);
  for (const auto& c : cs) {
    EXPECT_EQ(c.support.size(), 2u);
    EXPECT_EQ(c.coeffs[c.support[0]], z(1));
    EXPECT_EQ(c.coeffs[c.support[1]], z(-1));
  }
}

TEST(CircuitsTest, CircuitInvariantsOnRandomMatrices) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix a = testing::random_rational(1 + rng() % 3, 2 + rng() % 5, rng, 1, 1);
    for (const auto& c : circuits(a)) {
      for (const auto& x : a * c.coeffs) EXPECT_TRUE(x.is_zero());
      EXPECT_EQ(c.coeffs[c.support.front()], z(1));
      EXPECT_EQ(rank(a.select_columns(c.support)), c.support.size() - 1);
      for (std::size_t drop = 0; drop < c.support.size(); ++drop) {
        IndexList sub;
        for (std::size_t t = 0; t < c.support.size(); ++t) {
          if (t != drop) sub.push_back(c.support[t]);
        }
        EXPECT_EQ(rank(a.select_columns(sub)), sub.size());
      }
    }
  }
}

TEST(CircuitsTest, GuardExceeded) {
  EXPECT_THROW(circuits(Matrix(FieldMode::kRational, 1, 65)), GuardExceeded);
  EXPECT_THROW(circuits(Matrix::identity(FieldMode::kRational, 9)), GuardExceeded);
  EXPECT_THROW(kappa_detratio(random_integer_matrix(5, 30, -3, 3, 1)), GuardExceeded);
  EXPECT_NO_THROW(kappa_detratio(half_circle(32)));
}

TEST(KappaTest, HalfCircleLarge) {
  for (std::size_t n : {16u, 32u}) {
    Kappa k = kappa_detratio(half_circle(n));
    EXPECT_GE(k.value, n / M_PI);
    EXPECT_NEAR(k.value, 1.0 / std::sin(M_PI / n), 1e-7);
  }
}

TEST(KappaTest, SingleCircuitExample) {
  Matrix a = ints({{1, 0, 2}, {0, 1, 1}});
  Kappa k = kappa_circuit(a);
  EXPECT_TRUE(k.has_circuit);
  EXPECT_EQ(*k.value_sq, mpq_class(4));
  EXPECT_DOUBLE_EQ(k.value, 2.0);
  Kappa kd = kappa_detratio(a);
  EXPECT_EQ(*kd.value_sq, mpq_class(4));
}

TEST(KappaTest, TotallyUnimodular) {
  EXPECT_EQ(*kappa_circuit(ints({{1, 0, 1}, {0, 1, 1}})).value_sq, mpq_class(1));
}

TEST(KappaTest, CompleteGraphIncidence) {
  Matrix a = unsigned_incidence_complete(6);
  Kappa k = kappa_circuit(a);
  EXPECT_EQ(*k.value_sq, mpq_class(4));
  EXPECT_EQ(*kappa_detratio(a).value_sq, mpq_class(4));
}

TEST(KappaTest, HalfCircleFour) {
  Kappa k = kappa_detratio(half_circle(4));
  EXPECT_NEAR(k.value, std::sqrt(2.0), 1e-9);
  EXPECT_GE(k.value, 4.0 / M_PI);
  EXPECT_NEAR(kappa(half_circle(4)).value, std::sqrt(2.0), 1e-9);
  EXPECT_THROW(kappa_circuit(half_circle(4)), PreconditionError);
}

TEST(KappaTest, HalfCircleMatchesSineFormula) {
  // Largest over smallest pairwise sine; 1 / sin(pi / n) for even n.
  for (std::size_t n : {3u, 4u, 5u, 8u, 12u}) {
    double expected = std::sin(static_cast<double>(n / 2) * M_PI / n) / std::sin(M_PI / n);
    EXPECT_NEAR(kappa_detratio(half_circle(n)).value, expected, 1e-8) << n;
    if (n % 2 == 0) EXPECT_NEAR(expected, 1.0 / std::sin(M_PI / n), 1e-12);
  }
}

TEST(KappaTest, NoCircuitIsFlagged) {
  Kappa k = kappa_circuit(Matrix::identity(FieldMode::kRational, 3));
  EXPECT_FALSE(k.has_circuit);
  EXPECT_EQ(k.value, 1.0);
  EXPECT_FALSE(kappa_detratio(Matrix::identity(FieldMode::kRational, 3)).has_circuit);
}

TEST(KappaTest, LoopGivesRatioOne) {
  Kappa k = kappa_detratio(ints({{1, 0}, {0, 0}}));
  EXPECT_TRUE(k.has_circuit);
  EXPECT_EQ(*k.value_sq, mpq_class(1));
}

TEST(KappaTest, WitnessesReproduceValue) {
  Matrix a = ints({{1, 0, 3, 1}, {0, 1, 1, -2}});
  Kappa kc = kappa_circuit(a);
  const auto& x = kc.circuit->coeffs;
  mpq_class ratio = x[kc.ratio_num].abs2().real_rational() / x[kc.ratio_den].abs2().real_rational();
  EXPECT_EQ(ratio, *kc.value_sq);
  Kappa kd = kappa_detratio(a);
  IndexList swapped;
  for (auto b : kd.basis) {
    if (b != kd.swap_out) swapped.push_back(b);
  }
  swapped.push_back(kd.swap_in);
  std::sort(swapped.begin(), swapped.end());
  mpq_class num = det(a.select_columns(swapped)).abs2().real_rational();
  mpq_class den = det(a.select_columns(kd.basis)).abs2().real_rational();
  EXPECT_EQ(num / den, *kd.value_sq);
}

TEST(KappaTest, CircuitAndDeterminantFormsAgree) {
  std::mt19937_64 rng(2024);
  int with_circuit = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t d = 1 + rng() % 4;
    std::size_t n = d + 1 + rng() % (9 - d);
    Matrix a = testing::random_rational(d, n, rng, 3, 3);
    if (trial % 4 == 0) {
      for (std::size_t j = 0; j < n; ++j) a(d - 1, j) = a(0, j) * q("2");
    }
    Kappa kc = kappa_circuit(a);
    Kappa kd = kappa_detratio(a);
    ASSERT_EQ(kc.has_circuit, kd.has_circuit);
    if (kc.has_circuit) {
      ++with_circuit;
      EXPECT_EQ(*kc.value_sq, *kd.value_sq) << trial;
      EXPECT_GE(*kc.value_sq, 1);
    }
  }
  EXPECT_EQ(with_circuit, 200);
}

TEST(KappaTest, GaussianFormsAgree) {
  Matrix a = dowling(3, 4);
  EXPECT_EQ(*kappa_circuit(a).value_sq, *kappa_detratio(a).value_sq);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> e(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix b(FieldMode::kGaussianRational, 2, 4);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 4; ++j) b(i, j) = testing::g(e(rng), e(rng));
    }
    Kappa kc = kappa_circuit(b);
    Kappa kd = kappa_detratio(b);
    ASSERT_EQ(kc.has_circuit, kd.has_circuit);
    if (kc.has_circuit) EXPECT_EQ(*kc.value_sq, *kd.value_sq);
  }
}

TEST(KappaTest, FloatDetratioMatchesExact) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix a = testing::random_rational(2 + rng() % 2, 5, rng, 3, 2);
    Kappa exact = kappa_circuit(a);
    EXPECT_NEAR(kappa_detratio(a.to_float()).value, exact.value, 1e-8 * exact.value);
  }
}

TEST(KappaTest, BoundedByDeltaModularity) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t d = 1 + rng() % 3;
    std::size_t n = d + 1 + rng() % 4;
    Matrix a = random_integer_matrix(d, n, -3, 3, rng());
    Kappa k = kappa_circuit(a);
    if (rank(a) == 0) continue;
    DeltaModularity dm = delta_modularity(a);
    mpq_class delta_sq = mpq_class(dm.value * dm.value);
    EXPECT_LE(*k.value_sq, delta_sq) << trial;
  }
}

TEST(KappaTest, BoundedByInverseDelta) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t d = 2 + rng() % 2;
    std::size_t n = d + 1 + rng() % 3;
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(testing::rational_unit_vector(d, rng));
    Matrix a = Matrix::from_columns(FieldMode::kRational, d, cols);
    for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(norm_sq(a.column(j)), z(1));
    if (rank(a) != d) continue;
    Kappa k = kappa_circuit(a);
    DeltaMeasure dm = delta_measure(a);
    EXPECT_LE(*k.value_sq * *dm.delta_sq, 1) << trial;
  }
}

TEST(KappaTest, TwoRowLowerBound) {
  // kappa >= l / (4 pi), checked against the lower bound pi > 333/106.
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> e(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t l = 3 + trial % 6;
    std::vector<Vector> cols;
    while (cols.size() < l) {
      Vector c = testing::ivec({e(rng), e(rng)});
      if (c[0].is_zero() && c[1].is_zero()) continue;
      bool ok = true;
      for (const auto& o : cols) ok = ok && !parallel(o, c);
      if (ok) cols.push_back(std::move(c));
    }
    Matrix a = Matrix::from_columns(FieldMode::kRational, 2, cols);
    mpq_class bound(106 * static_cast<long>(l), 4 * 333);
    bound.canonicalize();
    EXPECT_GE(*kappa_circuit(a).value_sq, bound * bound);
  }
}

TEST(DeltaTest, Examples) {
  EXPECT_EQ(*delta_measure(Matrix::identity(FieldMode::kRational, 2)).delta_sq, mpq_class(1));
  DeltaMeasure dm = delta_measure(ints({{1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(*dm.delta_sq, mpq_class(1, 2));
  EXPECT_THROW(delta_measure(ints({{1, 2}, {2, 4}})), PreconditionError);
}

TEST(DeltaTest, MatchesInverseRowOracle) {
  // dist(a_i, span(A_{B-i}))^2 = 1 / |row_i(A_B^{-1})|^2.
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t d = 1 + rng() % 3;
    std::size_t n = d + rng() % 3;
    Matrix a = testing::random_rational(d, n, rng, 3, 2);
    if (rank(a) != d) continue;
    mpq_class best = -1;
    for_each_combination(n, d, [&](const IndexList& b) {
      Matrix ab = a.select_columns(b);
      if (testing::laplace_det(ab).is_zero()) return true;
      Matrix inv = testing::cramer_inverse(ab);
      for (std::size_t i = 0; i < d; ++i) {
        mpq_class row = norm_sq(inv.row(i)).real_rational();
        mpq_class v = 1 / (row * norm_sq(ab.column(i)).real_rational());
        if (best < 0 || v < best) best = v;
      }
      return true;
    });
    EXPECT_EQ(*delta_measure(a).delta_sq, best) << trial;
  }
}

TEST(DeltaModularityTest, Examples) {
  EXPECT_EQ(delta_modularity(ints({{1, 0, 2}, {0, 1, 1}})).value, 2);
  EXPECT_EQ(delta_modularity(ints({{1, 0, 1}, {0, 1, 1}})).value, 1);
  EXPECT_EQ(delta_modularity(unsigned_incidence_complete(6)).value, 4);
  Matrix frac(FieldMode::kRational, 1, 1);
  frac(0, 0) = q("1/2");
  EXPECT_THROW(delta_modularity(frac), PreconditionError);
}

TEST(ChibarTest, Examples) {
  EXPECT_NEAR(chibar_sample(Matrix::identity(FieldMode::kRational, 2), 50, 1), 1.0, 1e-9);
  Matrix orth = ints({{2, 0, 0}, {0, 0, 3}});
  EXPECT_NEAR(chibar_sample(orth, 50, 1), 1.0, 1e-9);
  double c = chibar_sample(ints({{1, 0, 1}, {0, 1, 1}}), 1000, 42);
  EXPECT_GE(c, 1.0 - 1e-9);
  EXPECT_LE(c, std::sqrt(3.0) + 1e-9);
}

TEST(ChibarTest, UpperBoundedBySqrtNKappa) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t d = 1 + rng() % 3;
    std::size_t n = d + 1 + rng() % 3;
    Matrix a = testing::random_rational(d, n, rng, 3, 2);
    if (rank(a) != d) continue;
    double c = chibar_sample(a, 200, trial);
    double k = kappa_circuit(a).value;
    EXPECT_LE(c, std::sqrt(static_cast<double>(n)) * k + 1e-6);
  }
}

TEST(ChibarTest, Deterministic) {
  Matrix a = ints({{1, 2, 3}, {0, 1, 5}});
  EXPECT_EQ(chibar_sample(a, 100, 7), chibar_sample(a, 100, 7));
}

TEST(ProjectKernelTest, FullIndexSetKeepsKernel) {
  Matrix a = ints({{1, 0, 2}, {0, 1, 1}});
  Matrix p = project_kernel(a, {0, 1, 2});
  EXPECT_EQ(kernel_basis(p).vectors, kernel_basis(a).vectors);
  EXPECT_EQ(*kappa_circuit(p).value_sq, *kappa_circuit(a).value_sq);
}

TEST(ProjectKernelTest, SubsetExample) {
  Matrix a = ints({{1, 0, 2}, {0, 1, 1}});
  Matrix p = project_kernel(a, {0, 2});
  // ker A is spanned by (2, 1, -1); its projection onto {0, 2} by (2, -1).
  auto kb = kernel_basis(p);
  ASSERT_EQ(kb.vectors.size(), 1u);
  EXPECT_EQ(kb.vectors[0], (Vector{q("1"), q("-1/2")}));
  EXPECT_LE(*kappa_circuit(p).value_sq, 4);
}

TEST(ProjectKernelTest, EmptyIndexSet) {
  Matrix p = project_kernel(ints({{1, 0, 2}, {0, 1, 1}}), {});
  EXPECT_EQ(p.cols(), 0u);
  EXPECT_FALSE(kappa_circuit(p).has_circuit);
}

TEST(ProjectKernelTest, KappaIsMonotone) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t d = 1 + rng() % 3;
    std::size_t n = d + 1 + rng() % 4;
    Matrix a = testing::random_rational(d, n, rng, 3, 2);
    IndexList j;
    for (std::size_t c = 0; c < n; ++c) {
      if (rng() % 2) j.push_back(c);
    }
    Matrix p = project_kernel(a, j);
    // Kernel of p is exactly the projection.
    auto kb = kernel_basis(a);
    std::vector<Vector> projected;
    for (const auto& v : kb.vectors) {
      Vector w;
      for (auto c : j) w.push_back(v[c]);
      for (const auto& x : p * w) EXPECT_TRUE(x.is_zero());
      projected.push_back(w);
    }
    std::size_t proj_dim =
        projected.empty() || j.empty() ? 0 : rank(Matrix::from_rows(FieldMode::kRational, projected));
    EXPECT_EQ(kernel_basis(p).vectors.size(), proj_dim);
    EXPECT_LE(*kappa_circuit(p).value_sq, *kappa_circuit(a).value_sq) << trial;
  }
}

}  // namespace
}  // namespace kbound
