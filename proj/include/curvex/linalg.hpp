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

#ifndef CURVEX_LINALG_HPP
#define CURVEX_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "curvex/rational.hpp"

namespace curvex {

using QVector = std::vector<Rational>;

// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const Rational> entries() const { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  std::span<const Rational> row(std::size_t r) const {
    return std::span<const Rational>(entries_).subspan(r * cols_, cols_);
  }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

QMatrix transpose(const QMatrix& m);
QVector multiply(const QMatrix& m, std::span<const Rational> v);

struct Echelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

// Unique reduced row echelon form. Forward elimination is fraction-free on
// integer-scaled rows; the pivot in each column is the first row holding a
// nonzero entry there.
Echelon rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

// One basis vector per free column: 1 at the free column, the negated reduced
// entries at the pivot columns, 0 elsewhere. Ordered by free column.
std::vector<QVector> nullspace(const QMatrix& m);

// A solution of m*v = b with every free variable set to 0, or nullopt when the
// system is inconsistent.
std::optional<QVector> solve(const QMatrix& m, std::span<const Rational> b);

Rational determinant(const QMatrix& m);

}  // namespace curvex

#endif  // CURVEX_LINALG_HPP
