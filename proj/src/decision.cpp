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

#include "curvex/decision.hpp"

#include <utility>

#include "curvex/curves.hpp"
#include "curvex/error.hpp"
#include "curvex/linalg.hpp"

namespace curvex {

std::string_view to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::kConditionA:
      return "condition_a";
    case FailureKind::kConditionB:
      return "condition_b";
    case FailureKind::kCardinality:
      return "cardinality";
  }
  return "unknown";
}

ConditionResult condition_a(const PointSet& x, int m, int n) {
  const int kappa = m + n - 3;
  ConditionResult res;
  res.holds = true;
  if (kappa < 0) return res;
  const auto mask = fundamental_mask(x, kappa);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!mask[i]) continue;
    res.holds = false;
    res.point = x[i];
    res.certificate = fundamental_polynomial(x[i], x, kappa);
    if (!res.certificate) {
      throw Error(ErrorKind::kInternal, "fundamental polynomial not found");
    }
    break;
  }
  return res;
}

ConditionResult condition_b(const PointSet& x, int m) {
  if (m < 1) throw Error(ErrorKind::kInvalidArgument, "condition b needs m >= 1");
  ConditionResult res;
  // Pi_j sits inside Pi_{m-1} for every j < m.
  auto curve = curve_through_points(x, m - 1);
  res.holds = !curve.has_value();
  res.certificate = std::move(curve);
  return res;
}

Decision decide_intersection_set(const PointSet& x, int m, int n) {
  if (m < 1 || m > n) {
    throw Error(ErrorKind::kInvalidArgument,
                "degrees must satisfy 1 <= m <= n");
  }
  Decision d;
  d.kappa = m + n - 3;
  if (x.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(n)) {
    d.failure = Failure{FailureKind::kCardinality, std::nullopt, std::nullopt};
    return d;
  }
  if (auto a = condition_a(x, m, n); !a.holds) {
    d.failure = Failure{FailureKind::kConditionA, a.point, a.certificate};
    return d;
  }
  if (auto b = condition_b(x, m); !b.holds) {
    d.failure = Failure{FailureKind::kConditionB, std::nullopt, b.certificate};
    return d;
  }

  auto sigma_m = curve_through_points(x, m);
  if (!sigma_m) {
    throw Error(ErrorKind::kInternal, "no degree-m curve through the set");
  }
  std::optional<Poly> sigma_n;
  for (auto& candidate : vanishing_space(x, n).basis) {
    if (!is_in_sigma_span(candidate, *sigma_m)) {
      sigma_n = std::move(candidate);
      break;
    }
  }
  if (!sigma_n) {
    throw Error(ErrorKind::kInternal, "set is n-complete in sigma_m");
  }
  const auto cc = find_common_component(*sigma_m, *sigma_n);
  if (cc.shared) {
    throw Error(ErrorKind::kInternal, "witness curves share a component");
  }
  d.verdict = true;
  d.sigma_m = std::move(sigma_m);
  d.sigma_n = std::move(sigma_n);
  d.shear = cc.shear;
  return d;
}

bool verify_intersection_set(const PointSet& x, const Poly& sigma_m,
                             const Poly& sigma_n) {
  const int dm = sigma_m.effective_degree();
  const int dn = sigma_n.effective_degree();
  if (dm < 1 || dn < 1) return false;
  if (x.size() != static_cast<std::size_t>(dm) * static_cast<std::size_t>(dn)) {
    return false;
  }
  for (const auto& p : x) {
    if (!evaluate(sigma_m, p).is_zero() || !evaluate(sigma_n, p).is_zero()) {
      return false;
    }
  }
  return !common_component(sigma_m, sigma_n);
}

std::optional<NoetherTerms> noether_decompose(const Poly& p, const Poly& sigma_m,
                                              const Poly& sigma_n,
                                              const PointSet& x) {
  const int k = p.degree_bound();
  const int m = sigma_m.effective_degree();
  const int n = sigma_n.effective_degree();
  if (k < m) {
    throw Error(ErrorKind::kPrecondition,
                "degree of p is below the degree of sigma_m");
  }
  for (const auto& pt : x) {
    if (!evaluate(p, pt).is_zero()) {
      throw Error(ErrorKind::kPrecondition, "p does not vanish on the set");
    }
  }
  if (!verify_intersection_set(x, sigma_m, sigma_n)) {
    throw Error(ErrorKind::kPrecondition,
                "the set is not the intersection of the given curves");
  }
  const int na = dim_pi(k - m);
  const int nb = dim_pi(k - n);
  QMatrix sys(dim_pi(k), na + nb);
  auto fill = [&](int col, const Poly& sigma, int mono) {
    const Poly prod = lift(multiply(Poly::monomial(monomial_at(mono)), sigma), k);
    for (int r = 0; r < dim_pi(k); ++r) sys(r, col) = prod[r];
  };
  for (int c = 0; c < na; ++c) fill(c, sigma_m, c);
  for (int c = 0; c < nb; ++c) fill(na + c, sigma_n, c);
  auto v = solve(sys, p.coeffs());
  if (!v) return std::nullopt;
  std::vector<Rational> a(v->begin(), v->begin() + na);
  std::vector<Rational> b(v->begin() + na, v->end());
  NoetherTerms out{Poly(k - m, std::move(a)),
                   nb > 0 ? Poly(k - n, std::move(b)) : Poly(0)};
  return out;
}

CayleyBacharachReport verify_cayley_bacharach(const PointSet& x, int m, int n) {
  const int kappa = m + n - 3;
  CayleyBacharachReport rep;
  rep.essentially_dependent = is_essentially_dependent(x, kappa);
  rep.next_degree_independent = is_n_independent(x, kappa + 1);
  rep.punctured_independent = true;
  for (std::size_t i = 0; i < x.size() && rep.punctured_independent; ++i) {
    rep.punctured_independent = is_n_independent(x.without(i), kappa);
  }
  return rep;
}

}  // namespace curvex
