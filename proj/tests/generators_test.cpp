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

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace kbound {
namespace {

TEST(GeneratorsTest, DowlingColumnCounts) {
  EXPECT_EQ(dowling(3, 1).cols(), 6u);
  EXPECT_EQ(dowling(3, 4).cols(), 15u);
  EXPECT_EQ(dowling(4, 2).cols(), 16u);
  EXPECT_EQ(dowling(3, 1).mode(), FieldMode::kRational);
  EXPECT_EQ(dowling(3, 4).mode(), FieldMode::kGaussianRational);
  EXPECT_EQ(dowling(3, 3).mode(), FieldMode::kComplexFloat);
  EXPECT_THROW(dowling(1, 2), PreconditionError);
}

TEST(GeneratorsTest, DowlingEntries) {
  Matrix m = dowling(2, 4);
  // Columns e1, e2, then e1 - i^k e2.
  EXPECT_EQ(m(1, 3), Scalar::gaussian(0, -1));
  EXPECT_EQ(m(1, 5), Scalar::gaussian(0, 1));
  EXPECT_EQ(rank(m), 2u);
}

TEST(GeneratorsTest, HalfCircle) {
  Matrix m = half_circle(4);
  EXPECT_NEAR(m(0, 2).to_complex().real(), 0.0, 1e-15);
  EXPECT_NEAR(m(1, 2).to_complex().real(), 1.0, 1e-15);
  EXPECT_NEAR(m(0, 1).to_complex().real(), std::sqrt(0.5), 1e-15);
}

TEST(GeneratorsTest, IncidenceOfK6) {
  Matrix m = unsigned_incidence_complete(6);
  EXPECT_EQ(m.rows(), 6u);
  EXPECT_EQ(m.cols(), 15u);
  EXPECT_EQ(rank(m), 6u);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    int ones = 0;
    for (std::size_t i = 0; i < 6; ++i) ones += m(i, j) == testing::z(1);
    EXPECT_EQ(ones, 2);
  }
}

TEST(GeneratorsTest, RandomConfigIsFullDimensionalAndSeeded) {
  PointConfig a = random_config(5, 20, 7);
  PointConfig b = random_config(5, 20, 7);
  EXPECT_EQ(a.affine_dimension(), 5u);
  EXPECT_EQ(a.points(), b.points());
  EXPECT_THROW(random_config(3, 3, 1), PreconditionError);
}

}  // namespace
}  // namespace kbound
