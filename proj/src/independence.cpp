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

#include "curvex/independence.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "curvex/error.hpp"

namespace curvex {

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  std::set<Point> seen;
  for (const auto& p : points_) {
    if (!seen.insert(p).second) {
      throw Error(ErrorKind::kInvalidArgument,
                  "repeated point (" + p.x.str() + ", " + p.y.str() + ")");
    }
  }
}

std::optional<std::size_t> PointSet::index_of(const Point& p) const {
  const auto it = std::find(points_.begin(), points_.end(), p);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

PointSet PointSet::without(std::size_t index) const {
  PointSet out;
  out.points_.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i != index) out.points_.push_back(points_[i]);
  }
  return out;
}

QMatrix eval_matrix(const PointSet& x, int n) {
  const int cols = dim_pi(n);
  QMatrix m(x.size(), cols);
  std::vector<Rational> xp(std::max(n, 0) + 1), yp(std::max(n, 0) + 1);
  for (std::size_t r = 0; r < x.size(); ++r) {
    xp[0] = yp[0] = Rational(1);
    for (int k = 1; k <= n; ++k) {
      xp[k] = xp[k - 1] * x[r].x;
      yp[k] = yp[k - 1] * x[r].y;
    }
    for (int c = 0; c < cols; ++c) {
      const Monomial mono = monomial_at(c);
      m(r, c) = xp[mono.i] * yp[mono.j];
    }
  }
  return m;
}

bool is_n_independent(const PointSet& x, int n) {
  if (x.empty()) return true;
  if (static_cast<int>(x.size()) > dim_pi(n)) return false;
  return rank(eval_matrix(x, n)) == x.size();
}

bool is_n_poised(const PointSet& x, int n) {
  return static_cast<int>(x.size()) == dim_pi(n) && is_n_independent(x, n);
}

std::optional<Poly> fundamental_polynomial(const Point& a, const PointSet& x,
                                           int n) {
  const auto idx = x.index_of(a);
  if (!idx) {
    throw Error(ErrorKind::kInvalidArgument,
                "point is not a member of the set");
  }
  if (n < 0) return std::nullopt;
  QVector rhs(x.size());
  rhs[*idx] = Rational(1);
  auto v = solve(eval_matrix(x, n), rhs);
  if (!v) return std::nullopt;
  return Poly(n, std::move(*v));
}

std::vector<bool> fundamental_mask(const PointSet& x, int n) {
  std::vector<bool> mask(x.size(), true);
  for (const auto& rel : nullspace(transpose(eval_matrix(x, n)))) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!rel[i].is_zero()) mask[i] = false;
    }
  }
  return mask;
}

bool is_essentially_dependent(const PointSet& x, int k) {
  const auto mask = fundamental_mask(x, k);
  return std::none_of(mask.begin(), mask.end(), [](bool b) { return b; });
}

PointSet max_independent_subset(const PointSet& x, int n) {
  const QMatrix e = eval_matrix(x, n);
  // Accepted rows kept reduced: each has a leading 1 at its pivot column and
  // is cleared at every earlier pivot column.
  std::vector<QVector> basis;
  std::vector<std::size_t> pivots;
  std::vector<Point> kept;
  for (std::size_t r = 0; r < x.size(); ++r) {
    QVector row(e.row(r).begin(), e.row(r).end());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = row[pivots[b]];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (!basis[b][c].is_zero()) row[c] -= f * basis[b][c];
      }
    }
    const auto lead = std::find_if(row.begin(), row.end(),
                                   [](const Rational& v) { return !v.is_zero(); });
    if (lead == row.end()) continue;
    const Rational inv = Rational(1) / *lead;
    for (auto& v : row) v *= inv;
    pivots.push_back(static_cast<std::size_t>(lead - row.begin()));
    basis.push_back(std::move(row));
    kept.push_back(x[r]);
  }
  return PointSet(std::move(kept));
}

int vanishing_dim(const PointSet& x, int n) {
  return dim_pi(n) - static_cast<int>(rank(eval_matrix(x, n)));
}

std::optional<Poly> interpolate(const PointSet& x,
                                std::span<const Rational> values, int n) {
  if (values.size() != x.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "interpolation data length does not match the point count");
  }
  if (n < 0) {
    const bool zero = std::all_of(values.begin(), values.end(),
                                  [](const Rational& v) { return v.is_zero(); });
    if (zero) return Poly(0);
    return std::nullopt;
  }
  auto v = solve(eval_matrix(x, n), values);
  if (!v) return std::nullopt;
  return Poly(n, std::move(*v));
}

IndependenceReport analyze_independence(const PointSet& x, int n) {
  IndependenceReport rep;
  rep.n = n;
  const auto mask = fundamental_mask(x, n);
  rep.independent = std::all_of(mask.begin(), mask.end(), [](bool b) { return b; });
  rep.essentially_dependent =
      std::none_of(mask.begin(), mask.end(), [](bool b) { return b; });
  rep.poised = rep.independent && static_cast<int>(x.size()) == dim_pi(n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!mask[i]) {
      rep.witness_point = x[i];
      break;
    }
  }
  rep.max_independent_subset = max_independent_subset(x, n);
  rep.vanishing_dim = vanishing_dim(x, n);
  return rep;
}

}  // namespace curvex
