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

#include "univariate.hpp"

#include <algorithm>
#include <utility>

#include "curvex/error.hpp"

namespace curvex::detail {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> out = c_;
  const Rational l = lead();
  for (auto& v : out) v /= l;
  return UPoly(std::move(out));
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw Error(ErrorKind::kInternal, "polynomial division by 0");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Rational> quo(std::max(a.degree() - db + 1, 0));
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = rem[k] / b.lead();
    if (f.is_zero()) continue;
    quo[k - db] = f;
    for (int i = 0; i <= db; ++i) rem[k - db + i] -= f * b.coeffs()[i];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw Error(ErrorKind::kInternal, "inexact division");
  return q;
}

}  // namespace curvex::detail
