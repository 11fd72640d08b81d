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

#ifndef CURVEX_SRC_UNIVARIATE_HPP
#define CURVEX_SRC_UNIVARIATE_HPP

#include <vector>

#include "curvex/rational.hpp"

namespace curvex::detail {

// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const;

  UPoly monic() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder; the divisor must be nonzero.
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
// a / b, exact.
UPoly exact_quotient(const UPoly& a, const UPoly& b);

}  // namespace curvex::detail

#endif  // CURVEX_SRC_UNIVARIATE_HPP
