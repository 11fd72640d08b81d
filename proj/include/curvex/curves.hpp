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

#ifndef CURVEX_CURVES_HPP
#define CURVEX_CURVES_HPP

#include <optional>
#include <vector>

#include "curvex/independence.hpp"
#include "curvex/poly.hpp"

namespace curvex {

// Basis of the polynomials of degree <= n vanishing on a point set, taken
// from the canonical nullspace of the evaluation matrix (ordered by free
// column) and scaled so each leading graded-lex coefficient is 1.
struct CurveSpace {
  int n = 0;
  std::vector<Poly> basis;
};

CurveSpace vanishing_space(const PointSet& x, int n);

// First basis element of vanishing_space(x, k). Always present when
// x.size() < dim_pi(k).
std::optional<Poly> curve_through_points(const PointSet& x, int k);

// Every degree-n polynomial vanishing on x is a multiple of sigma. Decided by
// comparing dim P_{n,x} with dim Pi_{n-k}, k = deg sigma. For k > n the
// right side is 0 and the test reduces to x holding an n-poised subset.
// sigma is assumed squarefree. Throws kInvalidArgument if a point of x is
// off sigma or sigma is zero.
bool is_n_complete(const PointSet& x, const Poly& sigma, int n);

// p lies in span{ x^i y^j sigma : i + j <= deg_bound(p) - deg(sigma) }.
bool is_in_sigma_span(const Poly& p, const Poly& sigma);

struct CommonComponentResult {
  bool shared = false;
  // t of the change of coordinates (x, y) -> (x + t*y, y) applied first.
  int shear = 0;
};

// Shared nonconstant factor test through the y-resultant. Throws
// kInvalidArgument for zero or constant input.
CommonComponentResult find_common_component(const Poly& p, const Poly& q);
bool common_component(const Poly& p, const Poly& q);

// Optional squarefreeness diagnostic: p shares a factor with dp/dy or dp/dx.
bool has_repeated_factor(const Poly& p);

struct Incidence {
  Poly curve;
  PointSet points;
};

// First line (scanning point pairs in order) through at least n + 2 points.
std::optional<Incidence> find_overloaded_line(const PointSet& x, int n);

inline constexpr std::size_t kMaxConicSearchPoints = 30;

// First 5-point subset (lexicographic) whose conic pencil has a member through
// at least 2n + 2 points of x. Throws kInvalidArgument when x has more than
// kMaxConicSearchPoints points.
std::optional<Incidence> find_overloaded_conic(const PointSet& x, int n);

}  // namespace curvex

#endif  // CURVEX_CURVES_HPP
