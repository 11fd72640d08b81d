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

/*
 * C interface to curvex. Objects are opaque handles owned by the caller and
 * released with the matching *_free function. Every fallible call returns a
 * curvex_status; on failure curvex_last_error() describes the problem (the
 * message is thread-local and valid until the next failing call on the same
 * thread). Strings returned through char** are heap-allocated and released
 * with curvex_string_free.
 */
#ifndef CURVEX_CURVEX_H
#define CURVEX_CURVEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CURVEX_API __declspec(dllexport)
#else
#define CURVEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum curvex_status {
  CURVEX_OK = 0,
  CURVEX_ERR_INVALID_ARGUMENT = 1,
  CURVEX_ERR_PARSE = 2,
  CURVEX_ERR_PRECONDITION = 3,
  CURVEX_ERR_GENERATION = 4,
  CURVEX_ERR_INTERNAL = 5
} curvex_status;

typedef struct curvex_pointset curvex_pointset;
typedef struct curvex_poly curvex_poly;
typedef struct curvex_decision curvex_decision;
typedef struct curvex_scenario curvex_scenario;

CURVEX_API const char* curvex_version(void);
CURVEX_API const char* curvex_last_error(void);
CURVEX_API const char* curvex_status_name(curvex_status status);
CURVEX_API void curvex_string_free(char* s);

/* Point sets: {"points": [["num/den", "num/den"], ...]} */
CURVEX_API curvex_status curvex_pointset_parse(const char* json,
                                               curvex_pointset** out);
CURVEX_API void curvex_pointset_free(curvex_pointset* x);
CURVEX_API size_t curvex_pointset_size(const curvex_pointset* x);
CURVEX_API curvex_status curvex_pointset_to_json(const curvex_pointset* x,
                                                 char** out);

/* Polynomials: {"degree": n, "terms": [{"i": 1, "j": 0, "c": "1/2"}, ...]} */
CURVEX_API curvex_status curvex_poly_parse(const char* json, curvex_poly** out);
CURVEX_API void curvex_poly_free(curvex_poly* p);
CURVEX_API curvex_status curvex_poly_to_json(const curvex_poly* p, char** out);
CURVEX_API curvex_status curvex_poly_to_text(const curvex_poly* p, char** out);

/* Intersection-set decision for 1 <= m <= n. */
CURVEX_API curvex_status curvex_decide(const curvex_pointset* x, int m, int n,
                                       curvex_decision** out);
CURVEX_API void curvex_decision_free(curvex_decision* d);
/* 1 when x is the intersection of a degree-m and a degree-n curve. */
CURVEX_API int curvex_decision_verdict(const curvex_decision* d);
CURVEX_API curvex_status curvex_decision_to_json(const curvex_decision* d,
                                                 char** out);
CURVEX_API curvex_status curvex_decision_to_text(const curvex_decision* d,
                                                 char** out);
/* CURVEX_ERR_PRECONDITION when the verdict is negative. */
CURVEX_API curvex_status curvex_decision_witnesses(const curvex_decision* d,
                                                   curvex_poly** sigma_m,
                                                   curvex_poly** sigma_n);

CURVEX_API curvex_status curvex_verify_intersection(const curvex_pointset* x,
                                                    const curvex_poly* sigma_m,
                                                    const curvex_poly* sigma_n,
                                                    int* out);

/* p = a * sigma_m + b * sigma_n. */
CURVEX_API curvex_status curvex_noether(const curvex_poly* p,
                                        const curvex_poly* sigma_m,
                                        const curvex_poly* sigma_n,
                                        const curvex_pointset* x,
                                        curvex_poly** a, curvex_poly** b);

/* flags[0]: essentially (m+n-3)-dependent, flags[1]: (m+n-2)-independent,
 * flags[2]: every one-point deletion is (m+n-3)-independent. */
CURVEX_API curvex_status curvex_cayley_bacharach(const curvex_pointset* x,
                                                 int m, int n, int flags[3]);

/* Independence report at the given degree with overloaded line and conic
 * diagnostics, as JSON. */
CURVEX_API curvex_status curvex_analyze(const curvex_pointset* x, int degree,
                                        char** out);

/* Scenario generation. */
CURVEX_API curvex_status curvex_scenario_generate(const char* kind, int m,
                                                  int n, uint64_t seed,
                                                  curvex_scenario** out);
CURVEX_API curvex_status curvex_scenario_parse(const char* json,
                                               curvex_scenario** out);
CURVEX_API void curvex_scenario_free(curvex_scenario* s);
CURVEX_API curvex_status curvex_scenario_to_json(const curvex_scenario* s,
                                                 char** out);
/* "<kind>_m<m>_n<n>_s<seed>" */
CURVEX_API curvex_status curvex_scenario_name(const curvex_scenario* s,
                                              char** out);
CURVEX_API curvex_status curvex_scenario_points(const curvex_scenario* s,
                                                curvex_pointset** out);
CURVEX_API int curvex_scenario_truth(const curvex_scenario* s);

/* The fixed acceptance corpus: every applicable kind, 1 <= m <= n <= 5,
 * seeds 1..20. */
CURVEX_API size_t curvex_suite_size(void);
CURVEX_API curvex_status curvex_suite_scenario(size_t index,
                                               curvex_scenario** out);

#ifdef __cplusplus
}
#endif

#endif /* CURVEX_CURVEX_H */
