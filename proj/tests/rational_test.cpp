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

#include "curvex/rational.hpp"

#include <gtest/gtest.h>

#include "curvex/error.hpp"
#include "curvex/generators.hpp"

namespace curvex {
namespace {

TEST(Rational, ParseCanonicalizes) {
  EXPECT_EQ(Rational::parse("2/4").str(), "1/2");
  EXPECT_EQ(Rational::parse("-6/3").str(), "-2");
  EXPECT_EQ(Rational::parse("0/5").str(), "0");
  EXPECT_EQ(Rational::parse("17").str(), "17");
  EXPECT_EQ(Rational::parse("-3/7").denominator(), 7);
}

TEST(Rational, ParseRejectsMalformed) {
  for (const char* bad : {"", "-", "1/", "/2", "1.5", "+3", "1/-2", " 1", "1/0",
                          "a/b", "1//2", "--1"}) {
    EXPECT_THROW(Rational::parse(bad), Error) << bad;
  }
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  SplitMix64 rng(42);
  for (int i = 0; i < 500; ++i) {
    const Rational a = rng.rational();
    const Rational b = rng.rational();
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a * b) / b, a);
    EXPECT_GT(a.denominator(), 0);
    EXPECT_EQ(gcd(a.numerator(), a.denominator()) == 1 || a.is_zero(), true);
  }
}

TEST(Rational, PowAndOrdering) {
  EXPECT_EQ(pow(Rational::parse("-2/3"), 3), Rational::parse("-8/27"));
  EXPECT_EQ(pow(Rational(5), 0), Rational(1));
  EXPECT_LT(Rational::parse("1/3"), Rational::parse("1/2"));
  EXPECT_EQ(RationalHash{}(Rational::parse("2/4")), RationalHash{}(Rational::parse("1/2")));
}

}  // namespace
}  // namespace curvex
