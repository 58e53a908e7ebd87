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

#include "kbound/scalar.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace kbound {
namespace {

using testing::q;

TEST(ScalarTest, RationalsStayCanonical) {
  Scalar a = q("6/-4");
  EXPECT_EQ(a.as_rational().get_num(), -3);
  EXPECT_EQ(a.as_rational().get_den(), 2);
  Scalar b = q("1/3") + q("1/6");
  EXPECT_EQ(b.to_string(), "1/2");
  EXPECT_EQ((q("2/4") * q("2")).to_string(), "1");
}

TEST(ScalarTest, ParseRejectsMalformedInput) {
  EXPECT_THROW(parse_rational("1/0"), PreconditionError);
  EXPECT_THROW(parse_rational("abc"), PreconditionError);
  EXPECT_THROW(parse_rational("1/"), PreconditionError);
  EXPECT_EQ(parse_rational("-7"), mpq_class(-7));
  EXPECT_EQ(parse_rational("+3/9"), mpq_class(1, 3));
}

TEST(ScalarTest, MixingModesThrows) {
  Scalar a = q("1");
  Scalar b = Scalar::gaussian(1, 1);
  Scalar c = Scalar::complex({1.0, 0.0});
  EXPECT_THROW(a + b, FieldMismatch);
  EXPECT_THROW(b * c, FieldMismatch);
  EXPECT_THROW(a - c, FieldMismatch);
  EXPECT_THROW(a / q("0"), PreconditionError);
}

TEST(ScalarTest, GaussianArithmetic) {
  Scalar i = Scalar::gaussian(0, 1);
  EXPECT_EQ(i * i, Scalar::gaussian(-1, 0));
  Scalar w = Scalar::gaussian(mpq_class(3), mpq_class(4));
  EXPECT_EQ(w.abs2(), Scalar::gaussian(25, 0));
  EXPECT_EQ(w.conj(), Scalar::gaussian(3, -4));
  EXPECT_EQ(w / w, Scalar::one(FieldMode::kGaussianRational));
  EXPECT_EQ(w.abs2().real_rational(), mpq_class(25));
  EXPECT_THROW(w.real_rational(), PreconditionError);
}

TEST(ScalarTest, CeilAndFloor) {
  EXPECT_EQ(ceil_rational(mpq_class(7, 2)), 4);
  EXPECT_EQ(floor_rational(mpq_class(7, 2)), 3);
  EXPECT_EQ(ceil_rational(mpq_class(-7, 2)), -3);
  EXPECT_EQ(floor_rational(mpq_class(-7, 2)), -4);
  EXPECT_EQ(ceil_rational(mpq_class(3)), 3);
}

TEST(ScalarTest, FieldModeNamesRoundTrip) {
  for (auto m : {FieldMode::kRational, FieldMode::kGaussianRational, FieldMode::kComplexFloat}) {
    EXPECT_EQ(parse_field_mode(field_mode_name(m)), m);
  }
  EXPECT_THROW(parse_field_mode("real"), PreconditionError);
}

}  // namespace
}  // namespace kbound
