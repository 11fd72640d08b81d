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

#include "curvex/poly.hpp"

#include <gtest/gtest.h>

#include "curvex/error.hpp"
#include "oracles.hpp"

namespace curvex {
namespace {

const Poly kX = Poly::monomial({1, 0});
const Poly kY = Poly::monomial({0, 1});
const Poly kOne = Poly::constant(Rational(1));

Rational q(const char* s) { return Rational::parse(s); }

TEST(DimPi, Values) {
  EXPECT_EQ(dim_pi(2), 6);
  EXPECT_EQ(dim_pi(0), 1);
  EXPECT_EQ(dim_pi(-1), 0);
  for (int n = 0; n <= 20; ++n) EXPECT_EQ(dim_pi(n) - dim_pi(n - 1), n + 1);
}

TEST(DFunc, Values) {
  EXPECT_EQ(d_func(3, 5), 15);
  EXPECT_EQ(d_func(1, 1), 2);
  EXPECT_EQ(d_func(2, 4), 9);
  // Closed form k(2n - k + 3)/2 while k <= n + 2.
  for (int n = 0; n <= 10; ++n) {
    for (int k = 1; k <= n + 2; ++k) EXPECT_EQ(2 * d_func(k, n), k * (2 * n - k + 3));
  }
  // Below -1 the smaller space clamps to zero.
  EXPECT_EQ(d_func(6, 2), 6);
  EXPECT_THROW(d_func(0, 2), Error);
}

TEST(Monomial, GradedLexOrder) {
  const Monomial expected[] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}};
  for (int idx = 0; idx < 7; ++idx) EXPECT_EQ(monomial_at(idx), expected[idx]);
  for (int n = 0; n <= 12; ++n) {
    for (int idx = 0; idx < dim_pi(n); ++idx) {
      EXPECT_EQ(monomial_index(monomial_at(idx)), idx);
    }
  }
}

TEST(Evaluate, Examples) {
  const Poly p = Poly::linear(1, -1, -1);  // 1 - x - y
  EXPECT_EQ(evaluate(p, {0, 0}), Rational(1));
  const Poly xx1 = multiply(kX, subtract(kX, kOne));
  EXPECT_EQ(evaluate(xx1, {1, 5}), Rational(0));
  const Poly circle = add(multiply(kX, kX), multiply(kY, kY));
  EXPECT_EQ(evaluate(circle, {q("1/2"), q("1/3")}), q("13/36"));
}

TEST(Multiply, Examples) {
  EXPECT_EQ(multiply(kX, kY).coeff({1, 1}), Rational(1));
  const Poly sq = multiply(subtract(kX, kOne), add(kX, kOne));
  EXPECT_EQ(sq.coeff({2, 0}), Rational(1));
  EXPECT_EQ(sq.coeff({0, 0}), Rational(-1));
  EXPECT_EQ(sq.coeff({1, 0}), Rational(0));
  // (1 - x - y) * y = y - xy - y^2
  const Poly r = multiply(Poly::linear(1, -1, -1), kY);
  EXPECT_EQ(r.degree_bound(), 2);
  const std::vector<Rational> expected{0, 0, 1, 0, -1, -1};
  EXPECT_EQ(r, Poly(2, expected));
}

TEST(Multiply, IsEvaluationHomomorphism) {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly p = oracle::random_poly(rng, static_cast<int>(rng.uniform(0, 3)));
    const Poly r = oracle::random_poly(rng, static_cast<int>(rng.uniform(0, 3)));
    const Point pt{rng.rational(), rng.rational()};
    EXPECT_EQ(evaluate(multiply(p, r), pt), evaluate(p, pt) * evaluate(r, pt));
    EXPECT_EQ(evaluate(p, pt).value(), oracle::eval_poly(p, pt));
  }
}

TEST(Lift, Examples) {
  const Poly lx = lift(kX, 3);
  EXPECT_EQ(lx.coeffs().size(), 10u);
  EXPECT_EQ(lx.coeff({1, 0}), Rational(1));
  EXPECT_TRUE(lift(Poly(0), 5).is_zero());
  EXPECT_EQ(lift(Poly(0), 5).coeffs().size(), 21u);
  const Poly sq = subtract(multiply(kX, kX), Poly::constant(1));
  EXPECT_EQ(lift(sq, 2), sq);
  EXPECT_THROW(lift(sq, 1), Error);
  // A padded degree bound may shrink down to the effective degree.
  EXPECT_EQ(lift(lift(kX, 4), 1), kX);
}

TEST(Poly, EffectiveDegreeAndNormalize) {
  EXPECT_EQ(Poly(3).effective_degree(), -1);
  EXPECT_EQ(lift(kY, 4).effective_degree(), 1);
  const Poly p = Poly::linear(0, 2, 4);
  EXPECT_EQ(p.normalized(), Poly::linear(0, 1, 2));
  EXPECT_THROW(Poly(2, std::vector<Rational>(5)), Error);
}

TEST(Shear, MatchesSubstitution) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly p = oracle::random_poly(rng, 3);
    const Rational t = rng.rational();
    const Point pt{rng.rational(), rng.rational()};
    const Point moved{pt.x + t * pt.y, pt.y};
    EXPECT_EQ(evaluate(shear(p, t), pt), evaluate(p, moved));
    // Leading y-coefficient after the shear.
    const int d = p.effective_degree();
    EXPECT_EQ(shear(p, t).coeff({0, d}), leading_form_at(p, t));
  }
}

TEST(Derivatives, Basic) {
  // d/dx (x^2 y) = 2xy, d/dy (x^2 y) = x^2
  const Poly p = Poly::monomial({2, 1});
  EXPECT_EQ(derivative_x(p).coeff({1, 1}), Rational(2));
  EXPECT_EQ(derivative_y(p).coeff({2, 0}), Rational(1));
}

TEST(ToText, Rendering) {
  EXPECT_EQ(to_text(subtract(multiply(kX, kX), kX)), "x^2 - x");
  EXPECT_EQ(to_text(Poly(2)), "0");
  EXPECT_EQ(to_text(Poly::linear(q("3/4"), 0, -1)), "-y + 3/4");
  EXPECT_EQ(to_text(Poly::monomial({1, 1}, q("1/2"))), "1/2*x*y");
}

}  // namespace
}  // namespace curvex
