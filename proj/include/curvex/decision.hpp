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

#ifndef CURVEX_DECISION_HPP
#define CURVEX_DECISION_HPP

#include <optional>
#include <string_view>

#include "curvex/independence.hpp"
#include "curvex/poly.hpp"

namespace curvex {

enum class FailureKind { kConditionA, kConditionB, kCardinality };

std::string_view to_string(FailureKind kind);

// Why a point set was rejected. condition_a carries the point A and a
// polynomial of degree kappa vanishing on X \ {A} but not at A; condition_b
// carries a curve of degree < m through all of X.
struct Failure {
  FailureKind kind = FailureKind::kCardinality;
  std::optional<Point> point;
  std::optional<Poly> certificate;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct Decision {
  bool verdict = false;
  int kappa = 0;
  std::optional<Poly> sigma_m;
  std::optional<Poly> sigma_n;
  std::optional<Failure> failure;
  // Shear used by the post-check for a common component of the witnesses.
  std::optional<int> shear;

  friend bool operator==(const Decision&, const Decision&) = default;
};

struct ConditionResult {
  bool holds = false;
  std::optional<Point> point;
  std::optional<Poly> certificate;
};

// Every curve of degree m + n - 3 through all but one point of x passes
// through the last one. Vacuous when m + n - 3 < 0.
ConditionResult condition_a(const PointSet& x, int m, int n);

// No curve of degree < m contains x. Throws kInvalidArgument for m < 1.
ConditionResult condition_b(const PointSet& x, int m);

// Decides whether x is the full intersection of a degree-m and a degree-n
// curve (1 <= m <= n) and, when it is, returns witnesses: sigma_m is the first
// basis curve of degree m through x, sigma_n the first basis curve of degree n
// through x that is not a multiple of sigma_m.
Decision decide_intersection_set(const PointSet& x, int m, int n);

// Every point of x lies on both curves, #x equals the product of their
// degrees and the curves share no component.
bool verify_intersection_set(const PointSet& x, const Poly& sigma_m,
                             const Poly& sigma_n);

struct NoetherTerms {
  Poly a;  // multiplies sigma_m
  Poly b;  // multiplies sigma_n; the zero polynomial when deg p < deg sigma_n
};

// Writes p = a * sigma_m + b * sigma_n with deg a <= k - m, deg b <= k - n,
// k = degree bound of p. Throws kPrecondition if p does not vanish on x, the
// witnesses fail verify_intersection_set, or k < deg sigma_m.
std::optional<NoetherTerms> noether_decompose(const Poly& p, const Poly& sigma_m,
                                              const Poly& sigma_n,
                                              const PointSet& x);

struct CayleyBacharachReport {
  bool essentially_dependent = false;   // at degree kappa
  bool next_degree_independent = false; // at degree kappa + 1
  bool punctured_independent = false;   // every X \ {A} at degree kappa

  bool all() const {
    return essentially_dependent && next_degree_independent &&
           punctured_independent;
  }
};

CayleyBacharachReport verify_cayley_bacharach(const PointSet& x, int m, int n);

}  // namespace curvex

#endif  // CURVEX_DECISION_HPP
