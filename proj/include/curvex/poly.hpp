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

#ifndef CURVEX_POLY_HPP
#define CURVEX_POLY_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "curvex/rational.hpp"

namespace curvex {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

// dim of the space of bivariate polynomials of total degree <= n. The space
// for any negative degree is {0}, so the dimension is 0 there.
int dim_pi(int n);

// dim_pi(n) - dim_pi(n - k): the number of points on a degree-k curve that
// forces n-completeness.
int d_func(int k, int n);

// x^i y^j. Monomials are ordered graded-lex: by total degree ascending, then
// by the x-exponent descending (1, x, y, x^2, xy, y^2, x^3, ...).
struct Monomial {
  int i = 0;
  int j = 0;

  int degree() const { return i + j; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

int monomial_index(Monomial m);
Monomial monomial_at(int index);

// Dense polynomial in the graded-lex basis of the degree_bound space. The
// zero polynomial has every coefficient zero; its effective degree is -1.
class Poly {
 public:
  explicit Poly(int degree_bound = 0);
  Poly(int degree_bound, std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(Monomial m, const Rational& c = Rational(1));
  // a + b*x + c*y
  static Poly linear(const Rational& a, const Rational& b, const Rational& c);

  int degree_bound() const { return degree_bound_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  const Rational& operator[](int index) const { return coeffs_[index]; }
  // Zero when i + j exceeds the degree bound.
  Rational coeff(Monomial m) const;

  int effective_degree() const;
  bool is_zero() const;

  // Scaled so the first nonzero graded-lex coefficient is 1. Zero stays zero.
  Poly normalized() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  int degree_bound_;
  std::vector<Rational> coeffs_;
};

Rational evaluate(const Poly& p, const Point& pt);

// Degree bound of the product is the sum of the bounds.
Poly multiply(const Poly& p, const Poly& q);
Poly add(const Poly& p, const Poly& q);
Poly subtract(const Poly& p, const Poly& q);
Poly scale(const Poly& p, const Rational& c);

// Re-index into the degree-n basis; throws when n is below the effective
// degree.
Poly lift(const Poly& p, int n);

// p(x + t*y, y).
Poly shear(const Poly& p, const Rational& t);

// The homogeneous part of top degree, evaluated at (x, y) = (t, 1). After
// shear(p, t) this is the coefficient of y^deg.
Rational leading_form_at(const Poly& p, const Rational& t);

// Formal partial derivatives; the result keeps the same degree bound.
Poly derivative_x(const Poly& p);
Poly derivative_y(const Poly& p);

// Human-readable rendering, highest degree first: "x^2 - x", "1/2*x*y + 3".
std::string to_text(const Poly& p);

}  // namespace curvex

#endif  // CURVEX_POLY_HPP
