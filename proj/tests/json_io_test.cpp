// Copyright 2026 The curvex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "curvex/json_io.hpp"

#include <gtest/gtest.h>

#include "curvex/decision.hpp"
#include "curvex/error.hpp"
#include "curvex/generators.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace curvex {
namespace {

using json_io::Json;

Json round(const Json& j) { return json_io::parse(json_io::dump(j)); }

TEST(JsonIo, RationalForms) {
  EXPECT_EQ(json_io::rational_from_json(Json("3/7")), Rational(3) / 7);
  EXPECT_EQ(json_io::rational_from_json(Json("4/2")), Rational(2));
  EXPECT_EQ(json_io::rational_from_json(Json(-5)), Rational(-5));
  EXPECT_THROW(json_io::rational_from_json(Json(0.5)), Error);
  EXPECT_THROW(json_io::rational_from_json(Json("0.5")), Error);
  EXPECT_EQ(json_io::to_json(Rational(-3) / 6), Json("-1/2"));
}

TEST(JsonIo, PolyFormat) {
  const Poly p = subtract(multiply(fixtures::x(), fixtures::x()), fixtures::x());
  const Json j = json_io::to_json(p);
  EXPECT_EQ(json_io::dump(j), R"({
  "degree": 2,
  "terms": [
    {
      "i": 1,
      "j": 0,
      "c": "-1"
    },
    {
      "i": 2,
      "j": 0,
      "c": "1"
    }
  ]
}
)");
  EXPECT_EQ(json_io::poly_from_json(j), p);
}

TEST(JsonIo, PolyRejectsBadTerms) {
  EXPECT_THROW(json_io::poly_from_json(json_io::parse(
                   R"({"degree":1,"terms":[{"i":2,"j":0,"c":"1"}]})")),
               Error);
  EXPECT_THROW(json_io::poly_from_json(json_io::parse(
                   R"({"degree":1,"terms":[{"i":1,"j":0,"c":"1"},{"i":1,"j":0,"c":"2"}]})")),
               Error);
  EXPECT_THROW(json_io::poly_from_json(json_io::parse(R"({"terms":[]})")), Error);
}

TEST(JsonIo, PointSetParsing) {
  const PointSet x = json_io::pointset_from_json(
      json_io::parse(R"({"points": [["1/2", 3], ["-4", "0/9"]]})"));
  ASSERT_EQ(x.size(), 2u);
  EXPECT_EQ(x[0], (Point{Rational(1) / 2, 3}));
  EXPECT_EQ(x[1], (Point{-4, 0}));
  EXPECT_THROW(json_io::pointset_from_json(json_io::parse(R"({"points": [[1, 2], [1, 2]]})")),
               Error);
  EXPECT_THROW(json_io::pointset_from_json(json_io::parse(R"({"points": [[1]]})")), Error);
  EXPECT_THROW(json_io::parse("{"), Error);
}

TEST(JsonIo, RoundTripRandomPolysAndPoints) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly p = oracle::random_poly(rng, static_cast<int>(rng.uniform(0, 5)));
    EXPECT_EQ(json_io::poly_from_json(round(json_io::to_json(p))), p);
    const PointSet x(oracle::random_points(rng, static_cast<std::size_t>(rng.uniform(0, 8))));
    EXPECT_EQ(json_io::pointset_from_json(round(json_io::to_json(x))), x);
  }
}

TEST(JsonIo, RoundTripDecisionsAndScenarios) {
  for (auto kind : {ScenarioKind::kLineProductGrid, ScenarioKind::kNegativeMovedPoint,
                    ScenarioKind::kNegativeCollinearOverload,
                    ScenarioKind::kNegativeDeletedPoint, ScenarioKind::kRandomGeneric}) {
    const Scenario s = generate(kind, 2, 3, 6);
    EXPECT_EQ(json_io::scenario_from_json(round(json_io::to_json(s))), s);
    const Decision d = decide_intersection_set(s.points, s.m, s.n);
    EXPECT_EQ(json_io::decision_from_json(round(json_io::to_json(d))), d);
  }
}

TEST(JsonIo, DecisionKeys) {
  const Decision d = decide_intersection_set(fixtures::grid23_moved(), 2, 3);
  const Json j = json_io::to_json(d);
  EXPECT_EQ(j["verdict"], false);
  EXPECT_EQ(j["kappa"], 2);
  EXPECT_EQ(j["failure"]["kind"], "condition_a");
  EXPECT_TRUE(j["failure"].contains("point"));
  EXPECT_TRUE(j["failure"].contains("certificate"));
}

}  // namespace
}  // namespace curvex
