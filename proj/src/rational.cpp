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

#include <functional>
#include <utility>

#include "curvex/error.hpp"

namespace curvex {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::kInvalidArgument, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) {
    throw Error(ErrorKind::kInvalidArgument, "rational with zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view original = text;
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::string_view num = text;
  std::string_view den = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::kParse,
                "malformed fraction \"" + std::string(original) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::kParse,
                "zero denominator in \"" + std::string(original) + "\"");
  }
  if (negative) n = -n;
  return Rational(n, d);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::kInvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

std::size_t RationalHash::operator()(const Rational& r) const {
  const std::size_t h1 = std::hash<std::string>{}(r.numerator().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(r.denominator().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ull + (h1 << 6) + (h1 >> 2));
}

}  // namespace curvex
