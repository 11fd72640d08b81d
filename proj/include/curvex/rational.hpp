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

#ifndef CURVEX_RATIONAL_HPP
#define CURVEX_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>

namespace curvex {

// Exact rational number, always held in lowest terms with a positive
// denominator so that equality is structural.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT

  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(mpq_class value);

  // Accepts "a" or "a/b" with an optional leading '-' on the numerator only.
  static Rational parse(std::string_view text);

  // "a" for integers, "a/b" otherwise.
  std::string str() const;

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

Rational pow(const Rational& base, unsigned exponent);

struct RationalHash {
  std::size_t operator()(const Rational& r) const;
};

}  // namespace curvex

#endif  // CURVEX_RATIONAL_HPP
