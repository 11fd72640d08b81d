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

#include "curvex/curves.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "curvex/error.hpp"
#include "curvex/linalg.hpp"
#include "univariate.hpp"

namespace curvex {

using detail::UPoly;

CurveSpace vanishing_space(const PointSet& x, int n) {
  CurveSpace space;
  space.n = n;
  if (n < 0) return space;
  for (auto& v : nullspace(eval_matrix(x, n))) {
    space.basis.push_back(Poly(n, std::move(v)).normalized());
  }
  return space;
}

std::optional<Poly> curve_through_points(const PointSet& x, int k) {
  auto space = vanishing_space(x, k);
  if (space.basis.empty()) return std::nullopt;
  return std::move(space.basis.front());
}

bool is_n_complete(const PointSet& x, const Poly& sigma, int n) {
  if (sigma.is_zero()) {
    throw Error(ErrorKind::kInvalidArgument, "completeness in the zero curve");
  }
  for (const auto& p : x) {
    if (!evaluate(sigma, p).is_zero()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "point (" + p.x.str() + ", " + p.y.str() + ") is off the curve");
    }
  }
  const int k = sigma.effective_degree();
  return vanishing_dim(x, n) == dim_pi(n - k);
}

bool is_in_sigma_span(const Poly& p, const Poly& sigma) {
  const int n = p.degree_bound();
  const int m = sigma.effective_degree();
  if (m < 0 || m > n) return p.is_zero();
  const int multipliers = dim_pi(n - m);
  QMatrix span(dim_pi(n), multipliers + 1);
  for (int c = 0; c < multipliers; ++c) {
    const Poly col = lift(multiply(Poly::monomial(monomial_at(c)), sigma), n);
    for (int r = 0; r < dim_pi(n); ++r) span(r, c) = col[r];
  }
  QMatrix reduced(dim_pi(n), multipliers);
  for (int r = 0; r < dim_pi(n); ++r) {
    for (int c = 0; c < multipliers; ++c) reduced(r, c) = span(r, c);
    span(r, multipliers) = p[r];
  }
  return rank(reduced) == rank(span);
}

namespace {

// Coefficients in y of p, each a polynomial in x.
std::vector<UPoly> as_poly_in_y(const Poly& p) {
  const int d = std::max(p.effective_degree(), 0);
  std::vector<UPoly> out;
  for (int j = 0; j <= d; ++j) {
    std::vector<Rational> cx(d - j + 1);
    for (int i = 0; i + j <= d; ++i) cx[i] = p.coeff({i, j});
    out.emplace_back(std::move(cx));
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

UPoly content(const std::vector<UPoly>& coeffs) {
  UPoly g;
  for (const auto& c : coeffs) g = detail::gcd(g, c);
  return g;
}

Rational sylvester_determinant(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  const std::size_t da = a.size() - 1;
  const std::size_t db = b.size() - 1;
  const std::size_t size = da + db;
  QMatrix s(size, size);
  for (std::size_t r = 0; r < db; ++r) {
    for (std::size_t k = 0; k <= da; ++k) s(r, r + k) = a[da - k];
  }
  for (std::size_t r = 0; r < da; ++r) {
    for (std::size_t k = 0; k <= db; ++k) s(db + r, r + k) = b[db - k];
  }
  return determinant(s);
}

int max_x_degree(const std::vector<UPoly>& coeffs) {
  int d = 0;
  for (const auto& c : coeffs) d = std::max(d, c.degree());
  return d;
}

// Whether the y-resultant of two primitive polynomials (coefficients in x)
// vanishes identically. It has x-degree at most bound, so bound + 1
// nonvanishing samples decide it.
bool resultant_vanishes(const std::vector<UPoly>& p, const std::vector<UPoly>& q) {
  const int dp = static_cast<int>(p.size()) - 1;
  const int dq = static_cast<int>(q.size()) - 1;
  const int bound = dq * max_x_degree(p) + dp * max_x_degree(q);
  int samples = 0;
  for (long x0 = 0; samples <= bound; ++x0) {
    const Rational xv(x0);
    if (p.back()(xv).is_zero() || q.back()(xv).is_zero()) continue;
    std::vector<Rational> a, b;
    for (const auto& c : p) a.push_back(c(xv));
    for (const auto& c : q) b.push_back(c(xv));
    if (!sylvester_determinant(a, b).is_zero()) return false;
    ++samples;
  }
  return true;
}

int smallest_shear(const Poly& p, const Poly& q) {
  for (int t = 0;; ++t) {
    if (!leading_form_at(p, Rational(t)).is_zero() &&
        !leading_form_at(q, Rational(t)).is_zero()) {
      return t;
    }
  }
}

}  // namespace

CommonComponentResult find_common_component(const Poly& p, const Poly& q) {
  if (p.effective_degree() < 1 || q.effective_degree() < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "common component test needs nonconstant polynomials");
  }
  CommonComponentResult result;
  result.shear = smallest_shear(p, q);
  const Rational t(result.shear);
  auto py = as_poly_in_y(shear(p, t));
  auto qy = as_poly_in_y(shear(q, t));

  const UPoly cp = content(py);
  const UPoly cq = content(qy);
  if (detail::gcd(cp, cq).degree() > 0) {
    result.shared = true;
    return result;
  }
  for (auto& c : py) c = detail::exact_quotient(c, cp);
  for (auto& c : qy) c = detail::exact_quotient(c, cq);
  // A primitive part free of y is a unit; only the contents could overlap.
  if (py.size() < 2 || qy.size() < 2) return result;
  result.shared = resultant_vanishes(py, qy);
  return result;
}

bool common_component(const Poly& p, const Poly& q) {
  return find_common_component(p, q).shared;
}

bool has_repeated_factor(const Poly& p) {
  if (p.effective_degree() < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "squarefree test needs a nonconstant polynomial");
  }
  int t = 0;
  while (leading_form_at(p, Rational(t)).is_zero()) ++t;
  // After the shear every factor involves y, so a factor shared with the
  // y-derivative must be repeated.
  const Poly sheared = shear(p, Rational(t));
  const Poly dy = derivative_y(sheared);
  if (dy.effective_degree() < 1) return false;
  return common_component(sheared, dy);
}

namespace {

Poly line_through(const Point& a, const Point& b) {
  return Poly::linear(a.x * b.y - b.x * a.y, a.y - b.y, b.x - a.x).normalized();
}

std::vector<Point> incident(const Poly& curve, const PointSet& x) {
  std::vector<Point> on;
  for (const auto& p : x) {
    if (evaluate(curve, p).is_zero()) on.push_back(p);
  }
  return on;
}

// Line through the most points of pts; ties go to the first pair in order.
std::optional<Incidence> best_line(const std::vector<Point>& pts) {
  if (pts.empty()) return std::nullopt;
  const PointSet set(pts);
  if (pts.size() == 1) {
    return Incidence{Poly::linear(-pts[0].x, Rational(1), Rational(0)), set};
  }
  std::optional<Incidence> best;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Poly line = line_through(pts[i], pts[j]);
      auto on = incident(line, set);
      if (!best || on.size() > best->points.size()) {
        best = Incidence{std::move(line), PointSet(std::move(on))};
      }
    }
  }
  return best;
}

// Member of the conic family vanishing on the subset that passes through the
// most points of x.
std::optional<Incidence> best_conic(const CurveSpace& family, const PointSet& x) {
  if (family.basis.empty()) return std::nullopt;
  if (family.basis.size() == 1) {
    const Poly& c = family.basis.front();
    return Incidence{c, PointSet(incident(c, x))};
  }
  if (family.basis.size() == 2) {
    // Member u*c1 + w*c2 through a point P satisfies u*c1(P) + w*c2(P) = 0,
    // so non-base points split into classes by the ratio they force.
    const Poly& c1 = family.basis[0];
    const Poly& c2 = family.basis[1];
    std::vector<Point> base;
    std::map<std::pair<int, Rational>, std::vector<Point>> classes;
    std::vector<std::pair<int, Rational>> first_seen;
    for (const auto& p : x) {
      const Rational v1 = evaluate(c1, p);
      const Rational v2 = evaluate(c2, p);
      if (v1.is_zero() && v2.is_zero()) {
        base.push_back(p);
        continue;
      }
      const auto key = v2.is_zero() ? std::make_pair(1, Rational(0))
                                    : std::make_pair(0, -v1 / v2);
      auto& cls = classes[key];
      if (cls.empty()) first_seen.push_back(key);
      cls.push_back(p);
    }
    if (first_seen.empty()) return Incidence{c1, PointSet(base)};
    auto best_key = first_seen.front();
    for (const auto& k : first_seen) {
      if (classes[k].size() > classes[best_key].size()) best_key = k;
    }
    const Poly member = best_key.first == 1
                            ? c2
                            : add(c1, scale(c2, best_key.second)).normalized();
    return Incidence{member, PointSet(incident(member, x))};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Incidence> find_overloaded_line(const PointSet& x, int n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "negative degree");
  const std::size_t need = static_cast<std::size_t>(n) + 2;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      Poly line = line_through(x[i], x[j]);
      auto on = incident(line, x);
      if (on.size() >= need) {
        return Incidence{std::move(line), PointSet(std::move(on))};
      }
    }
  }
  return std::nullopt;
}

std::optional<Incidence> find_overloaded_conic(const PointSet& x, int n) {
  if (x.size() > kMaxConicSearchPoints) {
    throw Error(ErrorKind::kInvalidArgument,
                "conic search is limited to " +
                    std::to_string(kMaxConicSearchPoints) + " points");
  }
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "negative degree");
  const std::size_t need = 2 * static_cast<std::size_t>(n) + 2;
  if (x.size() < need) return std::nullopt;
  if (x.size() < 5) {
    // Fewer than five points always lie on a conic.
    return Incidence{*curve_through_points(x, 2), x};
  }
  std::vector<std::size_t> idx{0, 1, 2, 3, 4};
  const std::size_t total = x.size();
  for (;;) {
    std::vector<Point> subset;
    for (auto i : idx) subset.push_back(x[i]);
    const PointSet s(subset);
    const CurveSpace family = vanishing_space(s, 2);
    std::optional<Incidence> found;
    if (family.basis.size() <= 2) {
      found = best_conic(family, x);
    } else {
      // Five collinear points: every conic through them contains their line.
      const Poly line = line_through(subset[0], subset[1]);
      std::vector<Point> rest;
      for (const auto& p : x) {
        if (!evaluate(line, p).is_zero()) rest.push_back(p);
      }
      const auto other = best_line(rest);
      const Poly conic = other ? multiply(line, other->curve).normalized()
                               : multiply(line, line).normalized();
      found = Incidence{conic, PointSet(incident(conic, x))};
    }
    if (found && found->points.size() >= need) return found;

    // Next 5-combination in lexicographic order.
    int k = 4;
    while (k >= 0 && idx[k] == total - 5 + static_cast<std::size_t>(k)) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < 5; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::nullopt;
}

}  // namespace curvex
