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

#ifndef CURVEX_JSON_IO_HPP
#define CURVEX_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "curvex/curves.hpp"
#include "curvex/decision.hpp"
#include "curvex/generators.hpp"
#include "curvex/independence.hpp"
#include "curvex/poly.hpp"

// JSON forms. Every rational is a fraction string ("3/7", "-2", never a
// float); objects keep their documented key order. Parsers throw
// curvex::Error with kParse on malformed input and kInvalidArgument when the
// input is well-formed but violates an invariant (e.g. repeated points).
namespace curvex::json_io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Point& p);
Json to_json(const Poly& p);        // {"degree", "terms": [{"i","j","c"}]}
Json to_json(const PointSet& x);    // {"points": [[x, y], ...]}
Json to_json(const Decision& d);
Json to_json(const Scenario& s);
Json to_json(const IndependenceReport& r);
Json to_json(const Incidence& inc);
Json to_json(const CayleyBacharachReport& r);

Rational rational_from_json(const Json& j);
Point point_from_json(const Json& j);
Poly poly_from_json(const Json& j);
PointSet pointset_from_json(const Json& j);
Decision decision_from_json(const Json& j);
Scenario scenario_from_json(const Json& j);

// Wraps Json::parse, rethrowing syntax errors as kParse.
Json parse(const std::string& text);

// Two-space indented document with a trailing newline.
std::string dump(const Json& j);

}  // namespace curvex::json_io

#endif  // CURVEX_JSON_IO_HPP
