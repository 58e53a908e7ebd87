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

#include "kbound/json_io.hpp"

#include <gtest/gtest.h>

#include "kbound/generators.hpp"
#include "test_util.hpp"

namespace kbound {
namespace {

using testing::ints;
using testing::q;

TEST(JsonMatrixTest, RationalRoundTrip) {
  Matrix a = Matrix::from_rows(FieldMode::kRational, {{q("1/2"), q("-3")}, {q("0"), q("7/9")}});
  Json j = matrix_to_json(a);
  EXPECT_EQ(j["field"], "rational");
  EXPECT_EQ(j["data"][0][0], "1/2");
  EXPECT_EQ(j["data"][0][1], "-3");
  EXPECT_EQ(matrix_from_json(j), a);
}

TEST(JsonMatrixTest, GaussianAndFloatRoundTrip) {
  Matrix d = dowling(3, 4);
  EXPECT_EQ(matrix_from_json(matrix_to_json(d)), d);
  Matrix h = half_circle(5);
  Matrix back = matrix_from_json(matrix_to_json(h));
  EXPECT_EQ(back, h);
  EXPECT_DOUBLE_EQ(back.tol(), h.tol());
}

TEST(JsonMatrixTest, ParsesHandWritten) {
  Json j = Json::parse(R"({"field":"gaussian_rational","data":[[["1","0"],["0","1/2"]]]})");
  Matrix m = matrix_from_json(j);
  EXPECT_EQ(m.rows(), 1u);
  EXPECT_EQ(m.cols(), 2u);
  EXPECT_EQ(m(0, 1), Scalar::gaussian(mpq_class(0), mpq_class(1, 2)));
  Json ints_doc = Json::parse(R"({"field":"rational","rows":1,"cols":2,"data":[[1,-2]]})");
  EXPECT_EQ(matrix_from_json(ints_doc), ints({{1, -2}}));
}

TEST(JsonMatrixTest, RejectsMalformed) {
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"field":"rational","data":[["1/0"]]})")), PreconditionError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"field":"real","data":[]})")), PreconditionError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"field":"rational","rows":2,"data":[["1"]]})")),
               PreconditionError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"field":"rational","data":[["1","2"],["3"]]})")),
               PreconditionError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"data":[]})")), PreconditionError);
}

TEST(JsonPointsTest, RoundTrip) {
  PointConfig s = grid(3);
  Json j = points_to_json(s);
  EXPECT_EQ(j["dim"], 2);
  PointConfig back = points_from_json(j);
  EXPECT_EQ(back.size(), 9u);
  EXPECT_EQ(back.points(), s.points());
}

TEST(JsonMatroidTest, RoundTripKeepsGround) {
  LinearMatroid m(ints({{1, 0, 1}, {0, 1, 1}}), {2, 5, 9});
  LinearMatroid back = matroid_from_json(matroid_to_json(m));
  EXPECT_EQ(back.ground(), m.ground());
  EXPECT_EQ(back.rep(), m.rep());
  EXPECT_EQ(matroid_from_json(matrix_to_json(m.rep())).ground(), (IndexList{0, 1, 2}));
}

TEST(JsonIpTest, RoundTripAndPlainArrays) {
  Json j = Json::parse(R"({"A":[[2,3]],"b":["4"],"u":[2,2],"c":["1","0"]})");
  IPInstance ip = ip_from_json(j);
  EXPECT_EQ(ip.a, ints({{2, 3}}));
  EXPECT_EQ(ip.b[0], 4);
  IPInstance back = ip_from_json(ip_to_json(ip));
  EXPECT_EQ(back.a, ip.a);
  EXPECT_EQ(back.u, ip.u);
  EXPECT_EQ(back.c, ip.c);
  EXPECT_THROW(ip_from_json(Json::parse(R"({"A":[[1]],"b":[1],"u":[-1],"c":[0]})")), PreconditionError);
}

TEST(JsonReportTest, KappaWitness) {
  Json j = to_json(kappa_circuit(ints({{1, 0, 2}, {0, 1, 1}})));
  EXPECT_EQ(j["kappa_sq"], "4");
  EXPECT_EQ(j["circuit"]["support"], Json::array({0, 1, 2}));
  EXPECT_TRUE(j["has_circuit"].get<bool>());
}

}  // namespace
}  // namespace kbound
