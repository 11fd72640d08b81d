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

#ifndef CURVEX_TESTS_FIXTURES_HPP
#define CURVEX_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "curvex/independence.hpp"
#include "curvex/poly.hpp"

namespace curvex::fixtures {

inline PointSet integer_points(std::initializer_list<std::pair<int, int>> pts) {
  std::vector<Point> out;
  for (const auto& [x, y] : pts) out.push_back({Rational(x), Rational(y)});
  return PointSet(std::move(out));
}

// {0,1} x {0,1,2}
inline PointSet grid23() {
  return integer_points({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}});
}

inline PointSet grid23_moved() {
  return integer_points({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 5}});
}

inline Poly x() { return Poly::monomial({1, 0}); }
inline Poly y() { return Poly::monomial({0, 1}); }
inline Poly c(const Rational& v) { return Poly::constant(v); }

// x(x - 1)
inline Poly grid_sigma2() { return multiply(x(), subtract(x(), c(1))); }

// y(y - 1)(y - 2)
inline Poly grid_sigma3() {
  return multiply(multiply(y(), subtract(y(), c(1))), subtract(y(), c(2)));
}

}  // namespace curvex::fixtures

#endif  // CURVEX_TESTS_FIXTURES_HPP
