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

#include "curvex/json_io.hpp"

#include <set>
#include <utility>

#include "curvex/error.hpp"

namespace curvex::json_io {
namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorKind::kParse, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object holding \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json* optional_field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return nullptr;
  return &*it;
}

long long as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long long>();
}

bool as_bool(const Json& j, const char* what) {
  if (!j.is_boolean()) bad(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

Json points_array(std::span<const Point> pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(to_json(p));
  return arr;
}

std::vector<Point> points_from_array(const Json& j) {
  if (!j.is_array()) bad("\"points\" must be an array");
  std::vector<Point> pts;
  pts.reserve(j.size());
  for (const auto& p : j) pts.push_back(point_from_json(p));
  return pts;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Point& p) { return Json::array({p.x.str(), p.y.str()}); }

Json to_json(const Poly& p) {
  Json terms = Json::array();
  for (int idx = 0; idx < dim_pi(p.degree_bound()); ++idx) {
    if (p[idx].is_zero()) continue;
    const Monomial m = monomial_at(idx);
    Json t;
    t["i"] = m.i;
    t["j"] = m.j;
    t["c"] = p[idx].str();
    terms.push_back(std::move(t));
  }
  Json out;
  out["degree"] = p.degree_bound();
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const PointSet& x) {
  Json out;
  out["points"] = points_array(x.points());
  return out;
}

Json to_json(const Decision& d) {
  Json out;
  out["verdict"] = d.verdict;
  out["kappa"] = d.kappa;
  if (d.sigma_m) out["sigma_m"] = to_json(*d.sigma_m);
  if (d.sigma_n) out["sigma_n"] = to_json(*d.sigma_n);
  if (d.failure) {
    Json f;
    f["kind"] = std::string(to_string(d.failure->kind));
    if (d.failure->point) f["point"] = to_json(*d.failure->point);
    if (d.failure->certificate) f["certificate"] = to_json(*d.failure->certificate);
    out["failure"] = std::move(f);
  }
  if (d.shear) out["shear"] = *d.shear;
  return out;
}

Json to_json(const Scenario& s) {
  Json out;
  out["kind"] = std::string(to_string(s.kind));
  out["m"] = s.m;
  out["n"] = s.n;
  out["seed"] = s.seed;
  out["points"] = points_array(s.points.points());
  out["truth"] = s.truth;
  if (s.sigma_m) out["sigma_m"] = to_json(*s.sigma_m);
  if (s.sigma_n) out["sigma_n"] = to_json(*s.sigma_n);
  return out;
}

Json to_json(const IndependenceReport& r) {
  Json out;
  out["degree"] = r.n;
  out["independent"] = r.independent;
  out["poised"] = r.poised;
  out["essentially_dependent"] = r.essentially_dependent;
  out["witness_point"] = r.witness_point ? to_json(*r.witness_point) : Json();
  out["vanishing_dim"] = r.vanishing_dim;
  out["max_independent_subset"] = points_array(r.max_independent_subset.points());
  return out;
}

Json to_json(const Incidence& inc) {
  Json out;
  out["curve"] = to_json(inc.curve);
  out["points"] = points_array(inc.points.points());
  return out;
}

Json to_json(const CayleyBacharachReport& r) {
  Json out;
  out["essentially_dependent"] = r.essentially_dependent;
  out["next_degree_independent"] = r.next_degree_independent;
  out["punctured_independent"] = r.punctured_independent;
  out["all"] = r.all();
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  bad("rational must be a fraction string such as \"3/7\"");
}

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("point must be a pair [x, y]");
  return Point{rational_from_json(j[0]), rational_from_json(j[1])};
}

Poly poly_from_json(const Json& j) {
  const long long degree = as_int(field(j, "degree"), "\"degree\"");
  if (degree < 0 || degree > 64) bad("\"degree\" out of range");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("\"terms\" must be an array");
  const int n = static_cast<int>(degree);
  std::vector<Rational> coeffs(dim_pi(n));
  std::set<int> seen;
  for (const auto& t : terms) {
    const long long i = as_int(field(t, "i"), "\"i\"");
    const long long jj = as_int(field(t, "j"), "\"j\"");
    if (i < 0 || jj < 0 || i + jj > degree) {
      bad("term exponent exceeds the degree bound");
    }
    const int idx = monomial_index({static_cast<int>(i), static_cast<int>(jj)});
    if (!seen.insert(idx).second) bad("repeated term in polynomial");
    coeffs[idx] = rational_from_json(field(t, "c"));
  }
  return Poly(n, std::move(coeffs));
}

PointSet pointset_from_json(const Json& j) {
  return PointSet(points_from_array(field(j, "points")));
}

Decision decision_from_json(const Json& j) {
  Decision d;
  d.verdict = as_bool(field(j, "verdict"), "\"verdict\"");
  d.kappa = static_cast<int>(as_int(field(j, "kappa"), "\"kappa\""));
  if (const Json* s = optional_field(j, "sigma_m")) d.sigma_m = poly_from_json(*s);
  if (const Json* s = optional_field(j, "sigma_n")) d.sigma_n = poly_from_json(*s);
  if (const Json* f = optional_field(j, "failure")) {
    Failure fail;
    const Json& kind = field(*f, "kind");
    if (!kind.is_string()) bad("failure kind must be a string");
    const auto name = kind.get<std::string>();
    if (name == "condition_a") {
      fail.kind = FailureKind::kConditionA;
    } else if (name == "condition_b") {
      fail.kind = FailureKind::kConditionB;
    } else if (name == "cardinality") {
      fail.kind = FailureKind::kCardinality;
    } else {
      bad("unknown failure kind \"" + name + "\"");
    }
    if (const Json* p = optional_field(*f, "point")) fail.point = point_from_json(*p);
    if (const Json* c = optional_field(*f, "certificate")) {
      fail.certificate = poly_from_json(*c);
    }
    d.failure = std::move(fail);
  }
  if (const Json* s = optional_field(j, "shear")) {
    d.shear = static_cast<int>(as_int(*s, "\"shear\""));
  }
  return d;
}

Scenario scenario_from_json(const Json& j) {
  Scenario s;
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) bad("scenario kind must be a string");
  try {
    s.kind = parse_scenario_kind(kind.get<std::string>());
  } catch (const Error& e) {
    bad(e.what());
  }
  s.m = static_cast<int>(as_int(field(j, "m"), "\"m\""));
  s.n = static_cast<int>(as_int(field(j, "n"), "\"n\""));
  const Json& seed = field(j, "seed");
  if (!seed.is_number_unsigned() &&
      !(seed.is_number_integer() && seed.get<long long>() >= 0)) {
    bad("\"seed\" must be a nonnegative integer");
  }
  s.seed = seed.get<std::uint64_t>();
  s.points = PointSet(points_from_array(field(j, "points")));
  s.truth = as_bool(field(j, "truth"), "\"truth\"");
  if (const Json* p = optional_field(j, "sigma_m")) s.sigma_m = poly_from_json(*p);
  if (const Json* p = optional_field(j, "sigma_n")) s.sigma_n = poly_from_json(*p);
  return s;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace curvex::json_io
