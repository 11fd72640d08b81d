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

#include "curvex/curvex.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>
#include <utility>

#include "curvex/curves.hpp"
#include "curvex/decision.hpp"
#include "curvex/error.hpp"
#include "curvex/generators.hpp"
#include "curvex/json_io.hpp"

struct curvex_pointset {
  curvex::PointSet value;
};
struct curvex_poly {
  curvex::Poly value;
};
struct curvex_decision {
  curvex::Decision value;
};
struct curvex_scenario {
  curvex::Scenario value;
};

namespace {

thread_local std::string g_last_error;

curvex_status status_of(curvex::ErrorKind kind) {
  switch (kind) {
    case curvex::ErrorKind::kInvalidArgument:
      return CURVEX_ERR_INVALID_ARGUMENT;
    case curvex::ErrorKind::kParse:
      return CURVEX_ERR_PARSE;
    case curvex::ErrorKind::kPrecondition:
      return CURVEX_ERR_PRECONDITION;
    case curvex::ErrorKind::kGeneration:
      return CURVEX_ERR_GENERATION;
    case curvex::ErrorKind::kInternal:
      return CURVEX_ERR_INTERNAL;
  }
  return CURVEX_ERR_INTERNAL;
}

curvex_status fail(curvex_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
curvex_status guarded(F&& body) {
  try {
    body();
    return CURVEX_OK;
  } catch (const curvex::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CURVEX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CURVEX_ERR_INTERNAL, e.what());
  }
}

void require(const void* ptr, const char* name) {
  if (ptr == nullptr) {
    throw curvex::Error(curvex::ErrorKind::kInvalidArgument,
                        std::string(name) + " is null");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string point_text(const curvex::Point& p) {
  return "(" + p.x.str() + ", " + p.y.str() + ")";
}

std::string decision_text(const curvex::Decision& d) {
  std::ostringstream os;
  os << "verdict: " << (d.verdict ? "true" : "false") << "\n";
  os << "kappa: " << d.kappa << "\n";
  if (d.sigma_m) os << "sigma_m: " << curvex::to_text(*d.sigma_m) << "\n";
  if (d.sigma_n) os << "sigma_n: " << curvex::to_text(*d.sigma_n) << "\n";
  if (d.failure) {
    os << "failure: " << curvex::to_string(d.failure->kind) << "\n";
    if (d.failure->point) os << "point: " << point_text(*d.failure->point) << "\n";
    if (d.failure->certificate) {
      os << "certificate: " << curvex::to_text(*d.failure->certificate) << "\n";
    }
  }
  if (d.shear) os << "shear: " << *d.shear << "\n";
  return os.str();
}

}  // namespace

extern "C" {

const char* curvex_version(void) { return "1.0.0"; }

const char* curvex_last_error(void) { return g_last_error.c_str(); }

const char* curvex_status_name(curvex_status status) {
  switch (status) {
    case CURVEX_OK:
      return "ok";
    case CURVEX_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case CURVEX_ERR_PARSE:
      return "parse error";
    case CURVEX_ERR_PRECONDITION:
      return "precondition violated";
    case CURVEX_ERR_GENERATION:
      return "generation failed";
    case CURVEX_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

void curvex_string_free(char* s) { std::free(s); }

curvex_status curvex_pointset_parse(const char* json, curvex_pointset** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = nullptr;
    auto x = curvex::json_io::pointset_from_json(curvex::json_io::parse(json));
    *out = new curvex_pointset{std::move(x)};
  });
}

void curvex_pointset_free(curvex_pointset* x) { delete x; }

size_t curvex_pointset_size(const curvex_pointset* x) {
  return x == nullptr ? 0 : x->value.size();
}

curvex_status curvex_pointset_to_json(const curvex_pointset* x, char** out) {
  return guarded([&] {
    require(x, "pointset");
    require(out, "out");
    *out = copy_string(curvex::json_io::dump(curvex::json_io::to_json(x->value)));
  });
}

curvex_status curvex_poly_parse(const char* json, curvex_poly** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = nullptr;
    auto p = curvex::json_io::poly_from_json(curvex::json_io::parse(json));
    *out = new curvex_poly{std::move(p)};
  });
}

void curvex_poly_free(curvex_poly* p) { delete p; }

curvex_status curvex_poly_to_json(const curvex_poly* p, char** out) {
  return guarded([&] {
    require(p, "poly");
    require(out, "out");
    *out = copy_string(curvex::json_io::dump(curvex::json_io::to_json(p->value)));
  });
}

curvex_status curvex_poly_to_text(const curvex_poly* p, char** out) {
  return guarded([&] {
    require(p, "poly");
    require(out, "out");
    *out = copy_string(curvex::to_text(p->value));
  });
}

curvex_status curvex_decide(const curvex_pointset* x, int m, int n,
                            curvex_decision** out) {
  return guarded([&] {
    require(x, "pointset");
    require(out, "out");
    *out = nullptr;
    auto d = curvex::decide_intersection_set(x->value, m, n);
    *out = new curvex_decision{std::move(d)};
  });
}

void curvex_decision_free(curvex_decision* d) { delete d; }

int curvex_decision_verdict(const curvex_decision* d) {
  return d != nullptr && d->value.verdict ? 1 : 0;
}

curvex_status curvex_decision_to_json(const curvex_decision* d, char** out) {
  return guarded([&] {
    require(d, "decision");
    require(out, "out");
    *out = copy_string(curvex::json_io::dump(curvex::json_io::to_json(d->value)));
  });
}

curvex_status curvex_decision_to_text(const curvex_decision* d, char** out) {
  return guarded([&] {
    require(d, "decision");
    require(out, "out");
    *out = copy_string(decision_text(d->value));
  });
}

curvex_status curvex_decision_witnesses(const curvex_decision* d,
                                        curvex_poly** sigma_m,
                                        curvex_poly** sigma_n) {
  return guarded([&] {
    require(d, "decision");
    require(sigma_m, "sigma_m");
    require(sigma_n, "sigma_n");
    *sigma_m = nullptr;
    *sigma_n = nullptr;
    if (!d->value.verdict) {
      throw curvex::Error(curvex::ErrorKind::kPrecondition,
                          "negative verdict carries no witnesses");
    }
    *sigma_m = new curvex_poly{*d->value.sigma_m};
    *sigma_n = new curvex_poly{*d->value.sigma_n};
  });
}

curvex_status curvex_verify_intersection(const curvex_pointset* x,
                                         const curvex_poly* sigma_m,
                                         const curvex_poly* sigma_n, int* out) {
  return guarded([&] {
    require(x, "pointset");
    require(sigma_m, "sigma_m");
    require(sigma_n, "sigma_n");
    require(out, "out");
    *out = curvex::verify_intersection_set(x->value, sigma_m->value,
                                           sigma_n->value)
               ? 1
               : 0;
  });
}

curvex_status curvex_noether(const curvex_poly* p, const curvex_poly* sigma_m,
                             const curvex_poly* sigma_n,
                             const curvex_pointset* x, curvex_poly** a,
                             curvex_poly** b) {
  return guarded([&] {
    require(p, "p");
    require(sigma_m, "sigma_m");
    require(sigma_n, "sigma_n");
    require(x, "pointset");
    require(a, "a");
    require(b, "b");
    *a = nullptr;
    *b = nullptr;
    auto terms = curvex::noether_decompose(p->value, sigma_m->value,
                                           sigma_n->value, x->value);
    if (!terms) {
      throw curvex::Error(curvex::ErrorKind::kInternal,
                          "decomposition system is inconsistent");
    }
    *a = new curvex_poly{std::move(terms->a)};
    *b = new curvex_poly{std::move(terms->b)};
  });
}

curvex_status curvex_cayley_bacharach(const curvex_pointset* x, int m, int n,
                                      int flags[3]) {
  return guarded([&] {
    require(x, "pointset");
    require(flags, "flags");
    if (m < 1 || m > n) {
      throw curvex::Error(curvex::ErrorKind::kInvalidArgument,
                          "degrees must satisfy 1 <= m <= n");
    }
    const auto rep = curvex::verify_cayley_bacharach(x->value, m, n);
    flags[0] = rep.essentially_dependent ? 1 : 0;
    flags[1] = rep.next_degree_independent ? 1 : 0;
    flags[2] = rep.punctured_independent ? 1 : 0;
  });
}

curvex_status curvex_analyze(const curvex_pointset* x, int degree, char** out) {
  return guarded([&] {
    require(x, "pointset");
    require(out, "out");
    if (degree < 0) {
      throw curvex::Error(curvex::ErrorKind::kInvalidArgument,
                          "degree must be nonnegative");
    }
    namespace io = curvex::json_io;
    io::Json j = io::to_json(curvex::analyze_independence(x->value, degree));
    const auto line = curvex::find_overloaded_line(x->value, degree);
    j["overloaded_line"] = line ? io::to_json(*line) : io::Json();
    if (x->value.size() > curvex::kMaxConicSearchPoints) {
      j["overloaded_conic"] = "skipped";
    } else {
      const auto conic = curvex::find_overloaded_conic(x->value, degree);
      j["overloaded_conic"] = conic ? io::to_json(*conic) : io::Json();
    }
    *out = copy_string(io::dump(j));
  });
}

curvex_status curvex_scenario_generate(const char* kind, int m, int n,
                                       uint64_t seed, curvex_scenario** out) {
  return guarded([&] {
    require(kind, "kind");
    require(out, "out");
    *out = nullptr;
    auto s = curvex::generate(curvex::parse_scenario_kind(kind), m, n, seed);
    *out = new curvex_scenario{std::move(s)};
  });
}

curvex_status curvex_scenario_parse(const char* json, curvex_scenario** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = nullptr;
    auto s = curvex::json_io::scenario_from_json(curvex::json_io::parse(json));
    *out = new curvex_scenario{std::move(s)};
  });
}

void curvex_scenario_free(curvex_scenario* s) { delete s; }

curvex_status curvex_scenario_to_json(const curvex_scenario* s, char** out) {
  return guarded([&] {
    require(s, "scenario");
    require(out, "out");
    *out = copy_string(curvex::json_io::dump(curvex::json_io::to_json(s->value)));
  });
}

curvex_status curvex_scenario_name(const curvex_scenario* s, char** out) {
  return guarded([&] {
    require(s, "scenario");
    require(out, "out");
    *out = copy_string(
        curvex::scenario_name(s->value.kind, s->value.m, s->value.n, s->value.seed));
  });
}

curvex_status curvex_scenario_points(const curvex_scenario* s,
                                     curvex_pointset** out) {
  return guarded([&] {
    require(s, "scenario");
    require(out, "out");
    *out = new curvex_pointset{s->value.points};
  });
}

int curvex_scenario_truth(const curvex_scenario* s) {
  return s != nullptr && s->value.truth ? 1 : 0;
}

size_t curvex_suite_size(void) { return curvex::acceptance_suite().size(); }

curvex_status curvex_suite_scenario(size_t index, curvex_scenario** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    const auto suite = curvex::acceptance_suite();
    if (index >= suite.size()) {
      throw curvex::Error(curvex::ErrorKind::kInvalidArgument,
                          "suite index out of range");
    }
    const auto& e = suite[index];
    *out = new curvex_scenario{curvex::generate(e.kind, e.m, e.n, e.seed)};
  });
}

}  // extern "C"
