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

#include "curvex/linalg.hpp"

#include <utility>

#include "curvex/error.hpp"

namespace curvex {
namespace {

using IntRow = std::vector<mpz_class>;

struct IntEchelon {
  std::vector<IntRow> rows;  // the first pivots.size() rows are the echelon
  std::vector<std::size_t> pivots;
  int swaps = 0;
  mpz_class last_pivot = 1;
  mpz_class row_scale = 1;  // product of the per-row denominators' lcms
};

// Each row is multiplied by the lcm of its denominators; the row space and so
// the reduced echelon form are unchanged.
IntEchelon to_integer_rows(const QMatrix& m) {
  IntEchelon e;
  e.rows.resize(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (const auto& v : m.row(r)) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.value().get_den_mpz_t());
    }
    e.row_scale *= l;
    IntRow& out = e.rows[r];
    out.resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& v = m(r, c).value();
      mpz_divexact(out[c].get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
      out[c] *= v.get_num();
    }
  }
  return e;
}

IntEchelon bareiss(const QMatrix& m) {
  IntEchelon e = to_integer_rows(m);
  auto& a = e.rows;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  mpz_class prev = 1;
  mpz_class t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      ++e.swaps;
    }
    const mpz_class& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] *= piv;
        t = lead * a[r][j];
        a[i][j] -= t;
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(),
                     prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    e.pivots.push_back(c);
    ++r;
  }
  e.last_pivot = prev;
  return e;
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols,
                 std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorKind::kInvalidArgument, "matrix entry count mismatch");
  }
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorKind::kInvalidArgument, "ragged matrix literal");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

QMatrix transpose(const QMatrix& m) {
  QMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  }
  return t;
}

QVector multiply(const QMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) {
    throw Error(ErrorKind::kInvalidArgument, "matrix-vector size mismatch");
  }
  QVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!v[c].is_zero() && !m(r, c).is_zero()) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

Echelon rref(const QMatrix& m) {
  IntEchelon e = bareiss(m);
  const std::size_t rank = e.pivots.size();
  const std::size_t cols = m.cols();
  QMatrix red(m.rows(), cols);
  for (std::size_t r = 0; r < rank; ++r) {
    const mpz_class& piv = e.rows[r][e.pivots[r]];
    for (std::size_t c = e.pivots[r]; c < cols; ++c) {
      if (e.rows[r][c] != 0) red(r, c) = Rational(e.rows[r][c], piv);
    }
  }
  // Clear above each pivot, bottom-up.
  for (std::size_t k = rank; k-- > 0;) {
    const std::size_t pc = e.pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      const Rational f = red(i, pc);
      if (f.is_zero()) continue;
      for (std::size_t c = pc; c < cols; ++c) {
        if (!red(k, c).is_zero()) red(i, c) -= f * red(k, c);
      }
    }
  }
  return Echelon{std::move(red), std::move(e.pivots)};
}

std::size_t rank(const QMatrix& m) { return bareiss(m).pivots.size(); }

std::vector<QVector> nullspace(const QMatrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = Rational(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      v[e.pivots[r]] = -e.reduced(r, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) {
    throw Error(ErrorKind::kInvalidArgument, "right-hand side size mismatch");
  }
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  QVector v(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    v[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return v;
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::kInvalidArgument, "determinant of non-square matrix");
  }
  if (m.rows() == 0) return Rational(1);
  const IntEchelon e = bareiss(m);
  if (e.pivots.size() < m.rows()) return Rational(0);
  mpz_class det = e.last_pivot;
  if (e.swaps % 2) det = -det;
  return Rational(det, e.row_scale);
}

}  // namespace curvex
