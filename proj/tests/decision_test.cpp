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

#include "curvex/decision.hpp"

#include <gtest/gtest.h>

#include "curvex/curves.hpp"
#include "curvex/error.hpp"
#include "curvex/generators.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace curvex {
namespace {

using fixtures::c;
using fixtures::grid23;
using fixtures::integer_points;
using fixtures::x;
using fixtures::y;

bool proportional(const Poly& a, const Poly& b) {
  const int d = std::max(a.degree_bound(), b.degree_bound());
  return lift(a, d).normalized() == lift(b, d).normalized();
}

bool identically_zero(const Poly& p) {
  for (const auto& v : p.coeffs()) {
    if (!v.is_zero()) return false;
  }
  return true;
}

TEST(ConditionA, Examples) {
  EXPECT_TRUE(condition_a(grid23(), 2, 3).holds);
  const auto moved = condition_a(fixtures::grid23_moved(), 2, 3);
  ASSERT_FALSE(moved.holds);
  ASSERT_TRUE(moved.point && moved.certificate);
  EXPECT_LE(moved.certificate->effective_degree(), 2);
  EXPECT_TRUE(condition_a(integer_points({{0, 0}}), 1, 1).holds);
}

TEST(ConditionB, Examples) {
  EXPECT_TRUE(condition_b(grid23(), 2).holds);
  const PointSet line = integer_points({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}});
  const auto b = condition_b(line, 2);
  ASSERT_FALSE(b.holds);
  ASSERT_TRUE(b.certificate.has_value());
  EXPECT_TRUE(proportional(*b.certificate, subtract(y(), c(1))));
  EXPECT_TRUE(condition_b(grid23(), 1).holds);
  EXPECT_THROW(condition_b(grid23(), 0), Error);
}

TEST(Decide, GridIsIntersection) {
  const Decision d = decide_intersection_set(grid23(), 2, 3);
  ASSERT_TRUE(d.verdict);
  EXPECT_EQ(d.kappa, 2);
  ASSERT_TRUE(d.sigma_m && d.sigma_n);
  EXPECT_TRUE(proportional(*d.sigma_m, fixtures::grid_sigma2()));
  EXPECT_TRUE(proportional(*d.sigma_n, fixtures::grid_sigma3()));
  EXPECT_TRUE(verify_intersection_set(grid23(), *d.sigma_m, *d.sigma_n));
  EXPECT_FALSE(d.failure.has_value());
}

TEST(Decide, GenericSixPointsRejected) {
  SplitMix64 rng(8);
  const PointSet pts(oracle::random_points(rng, 6));
  const Decision d = decide_intersection_set(pts, 2, 3);
  EXPECT_FALSE(d.verdict);
  ASSERT_TRUE(d.failure.has_value());
  EXPECT_EQ(d.failure->kind, FailureKind::kConditionA);
  const Poly& cert = *d.failure->certificate;
  for (const auto& p : pts) {
    EXPECT_EQ(oracle::eval_poly(cert, p) == 0, p != *d.failure->point);
  }
}

TEST(Decide, SinglePoint) {
  const PointSet one = integer_points({{3, -2}});
  const Decision d = decide_intersection_set(one, 1, 1);
  ASSERT_TRUE(d.verdict);
  EXPECT_EQ(d.kappa, -1);
  EXPECT_FALSE(proportional(*d.sigma_m, *d.sigma_n));
  EXPECT_EQ(oracle::eval_poly(*d.sigma_m, one[0]), 0);
  EXPECT_EQ(oracle::eval_poly(*d.sigma_n, one[0]), 0);
}

TEST(Decide, CardinalityAndDegreeChecks) {
  const Decision d = decide_intersection_set(grid23().without(2), 2, 3);
  EXPECT_FALSE(d.verdict);
  EXPECT_EQ(d.failure->kind, FailureKind::kCardinality);
  EXPECT_THROW(decide_intersection_set(grid23(), 3, 2), Error);
  EXPECT_THROW(decide_intersection_set(grid23(), 0, 6), Error);
}

TEST(Decide, Deterministic) {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const Scenario s = gen_line_product(static_cast<int>(rng.uniform(1, 3)), 3, rng.next());
    EXPECT_EQ(decide_intersection_set(s.points, s.m, s.n),
              decide_intersection_set(s.points, s.m, s.n));
  }
}

TEST(Verify, Examples) {
  const Poly s2 = fixtures::grid_sigma2();
  const Poly s3 = fixtures::grid_sigma3();
  EXPECT_TRUE(verify_intersection_set(grid23(), s2, s3));
  EXPECT_FALSE(verify_intersection_set(grid23(), s2, multiply(s2, y())));
  EXPECT_FALSE(verify_intersection_set(grid23().without(0), s2, s3));
  EXPECT_FALSE(verify_intersection_set(fixtures::grid23_moved(), s2, s3));
}

TEST(Noether, Examples) {
  const Poly s2 = fixtures::grid_sigma2();
  const Poly s3 = fixtures::grid_sigma3();
  const Poly p = multiply(s2, subtract(y(), c(3)));
  const auto t = noether_decompose(p, s2, s3, grid23());
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(lift(t->a, 1), subtract(y(), c(3)));
  EXPECT_TRUE(t->b.is_zero());

  const auto own = noether_decompose(s3, s2, s3, grid23());
  ASSERT_TRUE(own.has_value());
  EXPECT_TRUE(own->a.is_zero());
  EXPECT_EQ(lift(own->b, 0), c(1));

  const Poly prod = multiply(s2, s3);
  const auto big = noether_decompose(prod, s2, s3, grid23());
  ASSERT_TRUE(big.has_value());
  EXPECT_TRUE(identically_zero(
      subtract(subtract(prod, multiply(big->a, s2)), multiply(big->b, s3))));
}

TEST(Noether, Preconditions) {
  const Poly s2 = fixtures::grid_sigma2();
  const Poly s3 = fixtures::grid_sigma3();
  EXPECT_THROW(noether_decompose(x(), s2, s3, grid23()), Error);
  EXPECT_THROW(noether_decompose(add(s3, c(1)), s2, s3, grid23()), Error);
  EXPECT_THROW(noether_decompose(s3, s2, multiply(s2, y()), grid23()), Error);
}

TEST(Noether, IdentityOnGeneratedScenarios) {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = static_cast<int>(rng.uniform(1, 3));
    const int n = static_cast<int>(rng.uniform(m, 3));
    const Scenario s = gen_line_product(m, n, rng.next());
    const int k = static_cast<int>(rng.uniform(n, m + n));
    const Poly r = oracle::random_poly(rng, k - m);
    const Poly q = oracle::random_poly(rng, k - n);
    const Poly p = add(multiply(r, *s.sigma_m), multiply(q, *s.sigma_n));
    const auto t = noether_decompose(p, *s.sigma_m, *s.sigma_n, s.points);
    ASSERT_TRUE(t.has_value());
    EXPECT_TRUE(identically_zero(subtract(
        subtract(p, multiply(t->a, *s.sigma_m)), multiply(t->b, *s.sigma_n))));
  }
}

TEST(CayleyBacharach, Examples) {
  EXPECT_TRUE(verify_cayley_bacharach(grid23(), 2, 3).all());
  std::vector<Point> g33;
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j <= 2; ++j) g33.push_back({i, j});
  }
  EXPECT_TRUE(verify_cayley_bacharach(PointSet(g33), 3, 3).all());
  EXPECT_TRUE(verify_cayley_bacharach(integer_points({{0, 0}, {4, 0}}), 1, 2).all());
  const auto moved = verify_cayley_bacharach(fixtures::grid23_moved(), 2, 3);
  EXPECT_FALSE(moved.essentially_dependent);
}

// Whenever both conditions hold at cardinality mn, every punctured set is
// kappa-independent.
TEST(CayleyBacharach, PuncturedIndependenceFollowsFromConditions) {
  SplitMix64 rng(4242);
  int positive = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int m = static_cast<int>(rng.uniform(1, 2));
    const int n = static_cast<int>(rng.uniform(m, 3));
    const PointSet pts(oracle::small_grid_points(rng, static_cast<std::size_t>(m * n), 2));
    if (!condition_a(pts, m, n).holds || !condition_b(pts, m).holds) continue;
    ++positive;
    EXPECT_TRUE(verify_cayley_bacharach(pts, m, n).punctured_independent);
  }
  EXPECT_GT(positive, 0);
}

}  // namespace
}  // namespace curvex
