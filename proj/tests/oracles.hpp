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

// Test-only reference computations. Nothing here calls into the library's
// elimination or evaluation code, so tests can compare the two routes.
#ifndef CURVEX_TESTS_ORACLES_HPP
#define CURVEX_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "curvex/generators.hpp"
#include "curvex/linalg.hpp"
#include "curvex/poly.hpp"

namespace curvex::oracle {

using Mat = std::vector<std::vector<mpq_class>>;

inline Mat to_mat(const QMatrix& m) {
  Mat out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).value();
  }
  return out;
}

// Cofactor expansion along the first row.
inline mpq_class cofactor_det(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  mpq_class det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpq_class> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const mpq_class term = a[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? term : mpq_class(-term);
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start,
                    std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Largest k with a nonvanishing k x k minor. Exponential; small matrices only.
inline std::size_t minor_rank(const Mat& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        Mat sub(k, std::vector<mpq_class>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[r[i]][c[j]];
        }
        if (cofactor_det(sub) != 0) return k;
      }
    }
  }
  return 0;
}

// Plain Gauss-Jordan with division at every step.
inline std::size_t gauss_rank(Mat a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// Graded-lex monomial values at (x, y), computed without the library.
inline std::vector<mpq_class> monomial_row(const mpq_class& x,
                                           const mpq_class& y, int n) {
  std::vector<mpq_class> row;
  for (int d = 0; d <= n; ++d) {
    for (int i = d; i >= 0; --i) {
      mpq_class v = 1;
      for (int k = 0; k < i; ++k) v *= x;
      for (int k = 0; k < d - i; ++k) v *= y;
      row.push_back(v);
    }
  }
  return row;
}

inline Mat eval_rows(std::span<const Point> pts, int n) {
  Mat out;
  for (const auto& p : pts) out.push_back(monomial_row(p.x.value(), p.y.value(), n));
  return out;
}

// rank(E(X \ {A})) == rank(E(X)) for every A, by direct elimination.
inline bool essentially_dependent_by_removal(std::span<const Point> pts, int k) {
  if (k < 0) return true;
  const std::size_t full = gauss_rank(eval_rows(pts, k));
  for (std::size_t a = 0; a < pts.size(); ++a) {
    std::vector<Point> rest;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i != a) rest.push_back(pts[i]);
    }
    if (gauss_rank(eval_rows(rest, k)) != full) return false;
  }
  return true;
}

inline bool independent(std::span<const Point> pts, int k) {
  if (pts.empty()) return true;
  if (k < 0) return false;
  return gauss_rank(eval_rows(pts, k)) == pts.size();
}

// Sum of c * x^i * y^j over the stored coefficients, by explicit powers.
inline mpq_class eval_poly(const Poly& p, const Point& pt) {
  mpq_class sum = 0;
  int idx = 0;
  for (int d = 0; d <= p.degree_bound(); ++d) {
    for (int i = d; i >= 0; --i, ++idx) {
      mpq_class term = p[idx].value();
      for (int k = 0; k < i; ++k) term *= pt.x.value();
      for (int k = 0; k < d - i; ++k) term *= pt.y.value();
      sum += term;
    }
  }
  return sum;
}

inline bool collinear(const Point& a, const Point& b, const Point& c) {
  const mpq_class cross = (b.x.value() - a.x.value()) * (c.y.value() - a.y.value()) -
                          (b.y.value() - a.y.value()) * (c.x.value() - a.x.value());
  return cross == 0;
}

// Some `need` points of pts lie on one line, by exhaustive subset search.
inline bool has_collinear_subset(std::span<const Point> pts, std::size_t need) {
  if (need <= 2) return pts.size() >= need;
  std::vector<std::vector<std::size_t>> all;
  std::vector<std::size_t> cur;
  subsets(pts.size(), need, 0, cur, all);
  for (const auto& s : all) {
    bool ok = true;
    for (std::size_t k = 2; k < s.size() && ok; ++k) {
      ok = collinear(pts[s[0]], pts[s[1]], pts[s[k]]);
    }
    if (ok) return true;
  }
  return false;
}

// Random rational point set drawn from a small grid so that coincidences
// (collinear triples, shared conics) are common.
inline std::vector<Point> small_grid_points(SplitMix64& rng, std::size_t count,
                                            int span) {
  std::vector<Point> out;
  int guard = 0;
  while (out.size() < count && guard++ < 10000) {
    Point p{Rational(rng.uniform(0, span)), Rational(rng.uniform(0, span))};
    bool dup = false;
    for (const auto& q : out) dup = dup || q == p;
    if (!dup) out.push_back(p);
  }
  return out;
}

inline std::vector<Point> random_points(SplitMix64& rng, std::size_t count) {
  std::vector<Point> out;
  while (out.size() < count) {
    Point p{rng.rational(), rng.rational()};
    bool dup = false;
    for (const auto& q : out) dup = dup || q == p;
    if (!dup) out.push_back(p);
  }
  return out;
}

inline Poly random_poly(SplitMix64& rng, int degree) {
  std::vector<Rational> c(dim_pi(degree));
  for (auto& v : c) v = rng.rational();
  return Poly(degree, std::move(c));
}

}  // namespace curvex::oracle

#endif  // CURVEX_TESTS_ORACLES_HPP
