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

#ifndef CURVEX_INDEPENDENCE_HPP
#define CURVEX_INDEPENDENCE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "curvex/linalg.hpp"
#include "curvex/poly.hpp"

namespace curvex {

// Ordered list of pairwise distinct points. Predicates over a PointSet never
// depend on the order; the order only fixes tie-breaking in greedy scans.
class PointSet {
 public:
  PointSet() = default;
  // Throws kInvalidArgument on a repeated point.
  explicit PointSet(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point> points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  std::optional<std::size_t> index_of(const Point& p) const;
  bool contains(const Point& p) const { return index_of(p).has_value(); }
  PointSet without(std::size_t index) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> points_;
};

// Row r holds every graded-lex monomial of degree <= n evaluated at point r.
// For n < 0 the matrix has no columns.
QMatrix eval_matrix(const PointSet& x, int n);

bool is_n_independent(const PointSet& x, int n);
bool is_n_poised(const PointSet& x, int n);

// Throws kInvalidArgument when a is not in x.
std::optional<Poly> fundamental_polynomial(const Point& a, const PointSet& x,
                                           int n);

// mask[i] is true when point i has an n-fundamental polynomial in x. Point i
// lacks one exactly when some linear relation among the rows of the
// evaluation matrix involves row i, so a single left-nullspace computation
// answers every point at once.
std::vector<bool> fundamental_mask(const PointSet& x, int n);

// No point of x has a k-fundamental polynomial.
bool is_essentially_dependent(const PointSet& x, int k);

// Greedy scan in input order keeping each point that raises the rank.
PointSet max_independent_subset(const PointSet& x, int n);

int vanishing_dim(const PointSet& x, int n);

// Throws kInvalidArgument when values.size() != x.size().
std::optional<Poly> interpolate(const PointSet& x,
                                std::span<const Rational> values, int n);

struct IndependenceReport {
  int n = 0;
  bool independent = false;
  bool poised = false;
  bool essentially_dependent = false;
  std::optional<Point> witness_point;  // first point with no fundamental poly
  PointSet max_independent_subset;
  int vanishing_dim = 0;
};

IndependenceReport analyze_independence(const PointSet& x, int n);

}  // namespace curvex

#endif  // CURVEX_INDEPENDENCE_HPP
