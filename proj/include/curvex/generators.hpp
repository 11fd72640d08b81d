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

#ifndef CURVEX_GENERATORS_HPP
#define CURVEX_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvex/independence.hpp"
#include "curvex/poly.hpp"

namespace curvex {

// SplitMix64. Each step adds 0x9E3779B97F4A7C15 to the state and returns the
// state mixed by z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
// z *= 0x94D049BB133111EB; z ^= z >> 31. The stream depends only on the seed,
// so scenarios reproduce across platforms and languages.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // lo + next() % (hi - lo + 1)
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  // p / q with p drawn from [-9, 9] first, then q from [1, 9].
  Rational rational();

 private:
  std::uint64_t state_;
};

enum class ScenarioKind {
  kLineProductGrid,
  kConicChords,
  kReducibleMixed,
  kNegativeMovedPoint,
  kNegativeDeletedPoint,
  kNegativeCollinearOverload,
  kRandomGeneric,
};

std::string_view to_string(ScenarioKind kind);
// Throws kInvalidArgument for an unknown name.
ScenarioKind parse_scenario_kind(std::string_view name);

struct Scenario {
  ScenarioKind kind = ScenarioKind::kLineProductGrid;
  int m = 1;
  int n = 1;
  std::uint64_t seed = 0;
  PointSet points;
  bool truth = false;
  std::optional<Poly> sigma_m;
  std::optional<Poly> sigma_n;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// a*x + b*y + c = 0
struct Line {
  Rational a;
  Rational b;
  Rational c;

  Poly poly() const { return Poly::linear(c, a, b); }
};

inline constexpr int kMaxDraws = 1000;

// All pairwise intersections of the first family with the second, ordered by
// first-family line then second-family line. nullopt unless every pair meets
// in a single point, the points are distinct and no point lies on a third
// line.
std::optional<PointSet> line_product_points(std::span<const Line> first,
                                            std::span<const Line> second);

// Generators throw kGeneration once kMaxDraws resamples fail and
// kInvalidArgument when the degrees do not fit the construction.
Scenario gen_line_product(int m, int n, std::uint64_t seed);
// n >= 2 gives (m, n) = (2, n); n = 1 gives a single chord, reported as
// (1, 2) with the chord as sigma_m and the circle as sigma_n.
Scenario gen_conic_chords(int n, std::uint64_t seed);
// Unit circle times m - 2 random lines against n chords of the circle.
Scenario gen_reducible_mixed(int m, int n, std::uint64_t seed);
// mn random points in general position. Intersection sets only for
// (m, n) in {(1, 1), (1, 2), (2, 2)}.
Scenario gen_random_generic(int m, int n, std::uint64_t seed);
// kind must be one of the negative kinds; base.truth must hold. A moved point
// needs n >= 3 and a collinear overload m >= 2.
Scenario gen_negative(const Scenario& base, ScenarioKind kind,
                      std::uint64_t seed);

// Dispatch by kind; negatives are derived from gen_line_product(m, n, seed).
Scenario generate(ScenarioKind kind, int m, int n, std::uint64_t seed);

// Whether generate(kind, m, n, ...) is defined.
bool applicable(ScenarioKind kind, int m, int n);

struct SuiteEntry {
  ScenarioKind kind;
  int m;
  int n;
  std::uint64_t seed;
};

inline constexpr int kSuiteMaxDegree = 5;
inline constexpr int kSuiteSeeds = 20;

// Every applicable (kind, m, n) with 1 <= m <= n <= 5 and seeds 1..20, in a
// fixed order.
std::vector<SuiteEntry> acceptance_suite();

// "<kind>_m<m>_n<n>_s<seed>"
std::string scenario_name(ScenarioKind kind, int m, int n, std::uint64_t seed);

}  // namespace curvex

#endif  // CURVEX_GENERATORS_HPP
