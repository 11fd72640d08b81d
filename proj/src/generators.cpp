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

#include "curvex/generators.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "curvex/error.hpp"

namespace curvex {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

Rational SplitMix64::rational() {
  const auto p = uniform(-9, 9);
  const auto q = uniform(1, 9);
  return Rational(mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q)));
}

namespace {

constexpr std::array<std::pair<ScenarioKind, std::string_view>, 7> kKindNames{{
    {ScenarioKind::kLineProductGrid, "line_product_grid"},
    {ScenarioKind::kConicChords, "conic_chords"},
    {ScenarioKind::kReducibleMixed, "reducible_mixed"},
    {ScenarioKind::kNegativeMovedPoint, "negative_moved_point"},
    {ScenarioKind::kNegativeDeletedPoint, "negative_deleted_point"},
    {ScenarioKind::kNegativeCollinearOverload, "negative_collinear_overload"},
    {ScenarioKind::kRandomGeneric, "random_generic"},
}};

// Negative scenarios draw from a stream separate from their base.
constexpr std::uint64_t kNegativeStream = 0x6E65676174697665ull;

[[noreturn]] void draws_exhausted(std::string_view what) {
  throw Error(ErrorKind::kGeneration,
              std::string(what) + ": no admissible draw in " +
                  std::to_string(kMaxDraws) + " attempts");
}

Line random_line(SplitMix64& rng) {
  Line l;
  l.a = rng.rational();
  l.b = rng.rational();
  l.c = rng.rational();
  return l;
}

bool degenerate(const Line& l) { return l.a.is_zero() && l.b.is_zero(); }

bool on_line(const Line& l, const Point& p) {
  return (l.a * p.x + l.b * p.y + l.c).is_zero();
}

std::optional<Point> intersect(const Line& l1, const Line& l2) {
  const Rational det = l1.a * l2.b - l2.a * l1.b;
  if (det.is_zero()) return std::nullopt;
  return Point{(l1.b * l2.c - l2.b * l1.c) / det,
               (l2.a * l1.c - l1.a * l2.c) / det};
}

Poly product(std::span<const Poly> factors) {
  Poly acc = Poly::constant(Rational(1));
  for (const auto& f : factors) acc = multiply(acc, f);
  return acc.normalized();
}

Poly unit_circle() {
  // x^2 + y^2 - 1
  return Poly(2, {Rational(-1), 0, 0, Rational(1), 0, Rational(1)}).normalized();
}

Point circle_point(const Rational& t) {
  const Rational d = Rational(1) + t * t;
  return Point{(Rational(1) - t * t) / d, Rational(2) * t / d};
}

Line line_through(const Point& p, const Point& q) {
  return Line{p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y};
}

Point random_point(SplitMix64& rng) {
  Point p;
  p.x = rng.rational();
  p.y = rng.rational();
  return p;
}

// 2k distinct rational parameters on the unit circle.
std::optional<std::vector<Rational>> distinct_params(SplitMix64& rng, int k) {
  std::vector<Rational> ts;
  std::set<Rational> seen;
  for (int i = 0; i < 2 * k; ++i) {
    Rational t = rng.rational();
    if (!seen.insert(t).second) return std::nullopt;
    ts.push_back(std::move(t));
  }
  return ts;
}

bool three_collinear(std::span<const Point> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Line l = line_through(pts[i], pts[j]);
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (on_line(l, pts[k])) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(ScenarioKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

ScenarioKind parse_scenario_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "unknown scenario kind \"" + std::string(name) + "\"");
}

std::optional<PointSet> line_product_points(std::span<const Line> first,
                                            std::span<const Line> second) {
  std::vector<Line> all(first.begin(), first.end());
  all.insert(all.end(), second.begin(), second.end());
  if (std::any_of(all.begin(), all.end(), degenerate)) return std::nullopt;
  std::vector<Point> pts;
  std::set<Point> seen;
  for (std::size_t i = 0; i < first.size(); ++i) {
    for (std::size_t j = 0; j < second.size(); ++j) {
      auto p = intersect(first[i], second[j]);
      if (!p || !seen.insert(*p).second) return std::nullopt;
      for (std::size_t k = 0; k < all.size(); ++k) {
        if (k == i || k == first.size() + j) continue;
        if (on_line(all[k], *p)) return std::nullopt;
      }
      pts.push_back(std::move(*p));
    }
  }
  return PointSet(std::move(pts));
}

Scenario gen_line_product(int m, int n, std::uint64_t seed) {
  if (m < 1 || m > n) {
    throw Error(ErrorKind::kInvalidArgument, "line product needs 1 <= m <= n");
  }
  SplitMix64 rng(seed);
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    std::vector<Line> first, second;
    for (int i = 0; i < m; ++i) first.push_back(random_line(rng));
    for (int i = 0; i < n; ++i) second.push_back(random_line(rng));
    auto pts = line_product_points(first, second);
    if (!pts) continue;
    std::vector<Poly> fm, fn;
    for (const auto& l : first) fm.push_back(l.poly());
    for (const auto& l : second) fn.push_back(l.poly());
    return Scenario{ScenarioKind::kLineProductGrid, m, n, seed, std::move(*pts),
                    true, product(fm), product(fn)};
  }
  draws_exhausted("line product");
}

Scenario gen_conic_chords(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "conic chords need n >= 1");
  SplitMix64 rng(seed);
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    auto ts = distinct_params(rng, n);
    if (!ts) continue;
    std::vector<Point> pts;
    std::vector<Poly> chords;
    for (int c = 0; c < n; ++c) {
      const Point p = circle_point((*ts)[2 * c]);
      const Point q = circle_point((*ts)[2 * c + 1]);
      chords.push_back(line_through(p, q).poly());
      pts.push_back(p);
      pts.push_back(q);
    }
    Scenario s;
    s.kind = ScenarioKind::kConicChords;
    s.seed = seed;
    s.points = PointSet(std::move(pts));
    s.truth = true;
    if (n == 1) {
      s.m = 1;
      s.n = 2;
      s.sigma_m = product(chords);
      s.sigma_n = unit_circle();
    } else {
      s.m = 2;
      s.n = n;
      s.sigma_m = unit_circle();
      s.sigma_n = product(chords);
    }
    return s;
  }
  draws_exhausted("conic chords");
}

Scenario gen_reducible_mixed(int m, int n, std::uint64_t seed) {
  if (m < 3 || m > n) {
    throw Error(ErrorKind::kInvalidArgument,
                "reducible mixed scenario needs 3 <= m <= n");
  }
  const Poly circle = unit_circle();
  SplitMix64 rng(seed);
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    auto ts = distinct_params(rng, n);
    if (!ts) continue;
    std::vector<Line> extra;
    for (int i = 0; i < m - 2; ++i) extra.push_back(random_line(rng));

    std::vector<Point> on_circle;
    std::vector<Line> chords;
    for (int c = 0; c < n; ++c) {
      const Point p = circle_point((*ts)[2 * c]);
      const Point q = circle_point((*ts)[2 * c + 1]);
      chords.push_back(line_through(p, q));
      on_circle.push_back(p);
      on_circle.push_back(q);
    }
    const bool circle_clear = std::none_of(
        on_circle.begin(), on_circle.end(), [&](const Point& p) {
          return std::any_of(extra.begin(), extra.end(),
                             [&](const Line& l) { return on_line(l, p); });
        });
    if (!circle_clear) continue;
    auto crossings = line_product_points(extra, chords);
    if (!crossings) continue;
    std::vector<Point> pts = on_circle;
    pts.insert(pts.end(), crossings->begin(), crossings->end());
    const bool clear = std::none_of(
        crossings->begin(), crossings->end(),
        [&](const Point& p) { return evaluate(circle, p).is_zero(); });
    if (!clear) continue;
    std::set<Point> unique(pts.begin(), pts.end());
    if (unique.size() != pts.size()) continue;

    std::vector<Poly> fm{circle}, fn;
    for (const auto& l : extra) fm.push_back(l.poly());
    for (const auto& l : chords) fn.push_back(l.poly());
    return Scenario{ScenarioKind::kReducibleMixed, m, n, seed,
                    PointSet(std::move(pts)), true, product(fm), product(fn)};
  }
  draws_exhausted("reducible mixed");
}

Scenario gen_random_generic(int m, int n, std::uint64_t seed) {
  if (m < 1 || m > n) {
    throw Error(ErrorKind::kInvalidArgument, "random set needs 1 <= m <= n");
  }
  const bool small = (m == 1 && n <= 2) || (m == 2 && n == 2);
  const int kappa = m + n - 3;
  SplitMix64 rng(seed);
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    std::vector<Point> pts;
    for (int i = 0; i < m * n; ++i) pts.push_back(random_point(rng));
    std::set<Point> unique(pts.begin(), pts.end());
    if (unique.size() != pts.size() || three_collinear(pts)) continue;
    PointSet set(std::move(pts));
    // Outside the small cases an mn-point set in general position is
    // kappa-independent, which rules out condition a.
    if (!small && !is_n_independent(set, kappa)) continue;
    Scenario s;
    s.kind = ScenarioKind::kRandomGeneric;
    s.m = m;
    s.n = n;
    s.seed = seed;
    s.points = std::move(set);
    s.truth = small;
    return s;
  }
  draws_exhausted("random generic");
}

Scenario gen_negative(const Scenario& base, ScenarioKind kind,
                      std::uint64_t seed) {
  if (!base.truth || !base.sigma_m || !base.sigma_n) {
    throw Error(ErrorKind::kInvalidArgument,
                "negatives are built from a true scenario with witnesses");
  }
  if (!applicable(kind, base.m, base.n) ||
      (kind != ScenarioKind::kNegativeMovedPoint &&
       kind != ScenarioKind::kNegativeDeletedPoint &&
       kind != ScenarioKind::kNegativeCollinearOverload)) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(to_string(kind)) + " is not applicable for m=" +
                    std::to_string(base.m) + ", n=" + std::to_string(base.n));
  }
  SplitMix64 rng(seed ^ kNegativeStream);
  Scenario s;
  s.kind = kind;
  s.m = base.m;
  s.n = base.n;
  s.seed = seed;
  s.truth = false;
  const auto& src = base.points;
  const auto pick =
      static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(src.size()) - 1));

  if (kind == ScenarioKind::kNegativeDeletedPoint) {
    s.points = src.without(pick);
    return s;
  }
  if (kind == ScenarioKind::kNegativeMovedPoint) {
    for (int draw = 0; draw < kMaxDraws; ++draw) {
      const Point q = random_point(rng);
      if (src.contains(q) || evaluate(*base.sigma_m, q).is_zero() ||
          evaluate(*base.sigma_n, q).is_zero()) {
        continue;
      }
      std::vector<Point> pts(src.begin(), src.end());
      pts[pick] = q;
      s.points = PointSet(std::move(pts));
      return s;
    }
    draws_exhausted("moved point");
  }
  // Collinear overload: n + 2 points on y = a*x + b, the rest random off it.
  const int total = base.m * base.n;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const Rational slope = rng.rational();
    const Rational offset = rng.rational();
    std::vector<Point> pts;
    std::set<Point> seen;
    bool ok = true;
    for (int i = 0; i < base.n + 2 && ok; ++i) {
      const Rational x = rng.rational();
      Point p{x, slope * x + offset};
      ok = seen.insert(p).second;
      pts.push_back(std::move(p));
    }
    for (int i = base.n + 2; i < total && ok; ++i) {
      Point p = random_point(rng);
      ok = !(p.y == slope * p.x + offset) && seen.insert(p).second;
      pts.push_back(std::move(p));
    }
    if (!ok) continue;
    s.points = PointSet(std::move(pts));
    return s;
  }
  draws_exhausted("collinear overload");
}

bool applicable(ScenarioKind kind, int m, int n) {
  if (m < 1 || m > n) return false;
  switch (kind) {
    case ScenarioKind::kLineProductGrid:
    case ScenarioKind::kNegativeDeletedPoint:
    case ScenarioKind::kRandomGeneric:
      return true;
    case ScenarioKind::kConicChords:
      return m == 2 || (m == 1 && n == 2);
    case ScenarioKind::kReducibleMixed:
      return m >= 3;
    case ScenarioKind::kNegativeMovedPoint:
      // Below n = 3 a replacement point can still leave an intersection set.
      return n >= 3;
    case ScenarioKind::kNegativeCollinearOverload:
      return m >= 2;
  }
  return false;
}

Scenario generate(ScenarioKind kind, int m, int n, std::uint64_t seed) {
  if (!applicable(kind, m, n)) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(to_string(kind)) + " is not defined for m=" +
                    std::to_string(m) + ", n=" + std::to_string(n));
  }
  switch (kind) {
    case ScenarioKind::kLineProductGrid:
      return gen_line_product(m, n, seed);
    case ScenarioKind::kConicChords:
      return gen_conic_chords(m == 1 ? 1 : n, seed);
    case ScenarioKind::kReducibleMixed:
      return gen_reducible_mixed(m, n, seed);
    case ScenarioKind::kRandomGeneric:
      return gen_random_generic(m, n, seed);
    default:
      return gen_negative(gen_line_product(m, n, seed), kind, seed);
  }
}

std::vector<SuiteEntry> acceptance_suite() {
  std::vector<SuiteEntry> out;
  for (const auto& [kind, name] : kKindNames) {
    for (int m = 1; m <= kSuiteMaxDegree; ++m) {
      for (int n = m; n <= kSuiteMaxDegree; ++n) {
        // The (1, 2) single-chord variant is reachable through generate().
        if (kind == ScenarioKind::kConicChords && m != 2) continue;
        if (!applicable(kind, m, n)) continue;
        for (int s = 1; s <= kSuiteSeeds; ++s) {
          out.push_back(SuiteEntry{kind, m, n, static_cast<std::uint64_t>(s)});
        }
      }
    }
  }
  return out;
}

std::string scenario_name(ScenarioKind kind, int m, int n, std::uint64_t seed) {
  return std::string(to_string(kind)) + "_m" + std::to_string(m) + "_n" +
         std::to_string(n) + "_s" + std::to_string(seed);
}

}  // namespace curvex
