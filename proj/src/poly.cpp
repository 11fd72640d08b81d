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

#include <algorithm>
#include <utility>

#include "curvex/error.hpp"

namespace curvex {

int dim_pi(int n) {
  if (n < 0) return 0;
  return (n + 1) * (n + 2) / 2;
}

int d_func(int k, int n) {
  if (k < 1) throw Error(ErrorKind::kInvalidArgument, "d_func needs k >= 1");
  return dim_pi(n) - dim_pi(n - k);
}

int monomial_index(Monomial m) {
  const int d = m.degree();
  return dim_pi(d - 1) + (d - m.i);
}

Monomial monomial_at(int index) {
  int d = 0;
  while (dim_pi(d) <= index) ++d;
  const int offset = index - dim_pi(d - 1);
  return Monomial{d - offset, offset};
}

Poly::Poly(int degree_bound)
    : degree_bound_(degree_bound), coeffs_(dim_pi(degree_bound)) {
  if (degree_bound < 0) {
    throw Error(ErrorKind::kInvalidArgument, "negative degree bound");
  }
}

Poly::Poly(int degree_bound, std::vector<Rational> coeffs)
    : degree_bound_(degree_bound), coeffs_(std::move(coeffs)) {
  if (degree_bound < 0) {
    throw Error(ErrorKind::kInvalidArgument, "negative degree bound");
  }
  if (static_cast<int>(coeffs_.size()) != dim_pi(degree_bound)) {
    throw Error(ErrorKind::kInvalidArgument,
                "coefficient vector length does not match degree bound");
  }
}

Poly Poly::constant(const Rational& c) { return Poly(0, {c}); }

Poly Poly::monomial(Monomial m, const Rational& c) {
  Poly p(m.degree());
  p.coeffs_[monomial_index(m)] = c;
  return p;
}

Poly Poly::linear(const Rational& a, const Rational& b, const Rational& c) {
  return Poly(1, {a, b, c});
}

Rational Poly::coeff(Monomial m) const {
  if (m.i < 0 || m.j < 0 || m.degree() > degree_bound_) return Rational(0);
  return coeffs_[monomial_index(m)];
}

int Poly::effective_degree() const {
  for (int idx = static_cast<int>(coeffs_.size()) - 1; idx >= 0; --idx) {
    if (!coeffs_[idx].is_zero()) return monomial_at(idx).degree();
  }
  return -1;
}

bool Poly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

Poly Poly::normalized() const {
  const auto it = std::find_if(coeffs_.begin(), coeffs_.end(),
                               [](const Rational& c) { return !c.is_zero(); });
  if (it == coeffs_.end()) return *this;
  const Rational lead = *it;
  Poly out = *this;
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

Rational evaluate(const Poly& p, const Point& pt) {
  const int n = p.degree_bound();
  std::vector<Rational> xp(n + 1), yp(n + 1);
  xp[0] = yp[0] = Rational(1);
  for (int k = 1; k <= n; ++k) {
    xp[k] = xp[k - 1] * pt.x;
    yp[k] = yp[k - 1] * pt.y;
  }
  Rational sum;
  for (int idx = 0; idx < dim_pi(n); ++idx) {
    if (p[idx].is_zero()) continue;
    const Monomial m = monomial_at(idx);
    sum += p[idx] * xp[m.i] * yp[m.j];
  }
  return sum;
}

Poly multiply(const Poly& p, const Poly& q) {
  const int n = p.degree_bound() + q.degree_bound();
  std::vector<Rational> out(dim_pi(n));
  for (int a = 0; a < dim_pi(p.degree_bound()); ++a) {
    if (p[a].is_zero()) continue;
    const Monomial ma = monomial_at(a);
    for (int b = 0; b < dim_pi(q.degree_bound()); ++b) {
      if (q[b].is_zero()) continue;
      const Monomial mb = monomial_at(b);
      out[monomial_index({ma.i + mb.i, ma.j + mb.j})] += p[a] * q[b];
    }
  }
  return Poly(n, std::move(out));
}

Poly add(const Poly& p, const Poly& q) {
  const int n = std::max(p.degree_bound(), q.degree_bound());
  std::vector<Rational> out(dim_pi(n));
  for (int a = 0; a < dim_pi(p.degree_bound()); ++a) out[a] += p[a];
  for (int b = 0; b < dim_pi(q.degree_bound()); ++b) out[b] += q[b];
  return Poly(n, std::move(out));
}

Poly subtract(const Poly& p, const Poly& q) {
  return add(p, scale(q, Rational(-1)));
}

Poly scale(const Poly& p, const Rational& c) {
  std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& v : out) v *= c;
  return Poly(p.degree_bound(), std::move(out));
}

Poly lift(const Poly& p, int n) {
  if (n < 0 || n < p.effective_degree()) {
    throw Error(ErrorKind::kInvalidArgument,
                "cannot lift a degree " + std::to_string(p.effective_degree()) +
                    " polynomial into degree " + std::to_string(n));
  }
  // Graded-lex indices do not depend on the degree bound, so lifting is a
  // resize.
  std::vector<Rational> out(dim_pi(n));
  const int keep = std::min(dim_pi(n), dim_pi(p.degree_bound()));
  std::copy_n(p.coeffs().begin(), keep, out.begin());
  return Poly(n, std::move(out));
}

Poly shear(const Poly& p, const Rational& t) {
  const int n = p.degree_bound();
  std::vector<Rational> tp(n + 1);
  tp[0] = Rational(1);
  for (int k = 1; k <= n; ++k) tp[k] = tp[k - 1] * t;
  // binom[i][k]
  std::vector<std::vector<mpz_class>> binom(n + 1);
  for (int i = 0; i <= n; ++i) {
    binom[i].assign(i + 1, 1);
    for (int k = 1; k < i; ++k) binom[i][k] = binom[i - 1][k - 1] + binom[i - 1][k];
  }
  std::vector<Rational> out(dim_pi(n));
  for (int idx = 0; idx < dim_pi(n); ++idx) {
    if (p[idx].is_zero()) continue;
    const Monomial m = monomial_at(idx);
    for (int k = 0; k <= m.i; ++k) {
      const Rational c = p[idx] * Rational(binom[m.i][k], 1) * tp[m.i - k];
      out[monomial_index({k, m.i - k + m.j})] += c;
    }
  }
  return Poly(n, std::move(out));
}

Rational leading_form_at(const Poly& p, const Rational& t) {
  const int d = p.effective_degree();
  if (d < 0) return Rational(0);
  Rational sum;
  Rational tk(1);
  // Coefficient of y^d in p(x + t*y, y) is sum_i c(i, d - i) * t^i.
  for (int i = 0; i <= d; ++i) {
    sum += p.coeff({i, d - i}) * tk;
    tk *= t;
  }
  return sum;
}

Poly derivative_x(const Poly& p) {
  std::vector<Rational> out(p.coeffs().size());
  for (int idx = 0; idx < dim_pi(p.degree_bound()); ++idx) {
    const Monomial m = monomial_at(idx);
    if (m.i == 0 || p[idx].is_zero()) continue;
    out[monomial_index({m.i - 1, m.j})] += p[idx] * Rational(m.i);
  }
  return Poly(p.degree_bound(), std::move(out));
}

Poly derivative_y(const Poly& p) {
  std::vector<Rational> out(p.coeffs().size());
  for (int idx = 0; idx < dim_pi(p.degree_bound()); ++idx) {
    const Monomial m = monomial_at(idx);
    if (m.j == 0 || p[idx].is_zero()) continue;
    out[monomial_index({m.i, m.j - 1})] += p[idx] * Rational(m.j);
  }
  return Poly(p.degree_bound(), std::move(out));
}

namespace {

std::string monomial_text(Monomial m) {
  std::string s;
  auto factor = [&s](const char* var, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += var;
    if (e > 1) s += "^" + std::to_string(e);
  };
  factor("x", m.i);
  factor("y", m.j);
  return s;
}

}  // namespace

std::string to_text(const Poly& p) {
  std::string out;
  const int top = p.effective_degree();
  for (int d = top; d >= 0; --d) {
    for (int i = d; i >= 0; --i) {
      const Monomial m{i, d - i};
      const Rational c = p.coeff(m);
      if (c.is_zero()) continue;
      const bool negative = c.sign() < 0;
      const Rational mag = negative ? -c : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const std::string mono = monomial_text(m);
      if (mono.empty()) {
        out += mag.str();
      } else if (mag == Rational(1)) {
        out += mono;
      } else {
        out += mag.str() + "*" + mono;
      }
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace curvex
