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

// Command-line front end over the curvex C API.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict, 2 malformed
// input or usage, 3 scenario generation gave up, 4 internal error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "curvex/curvex.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitGeneration = 3;
constexpr int kExitInternal = 4;

struct Failure {
  int code;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using PointSetPtr =
    std::unique_ptr<curvex_pointset, Deleter<curvex_pointset, curvex_pointset_free>>;
using PolyPtr = std::unique_ptr<curvex_poly, Deleter<curvex_poly, curvex_poly_free>>;
using DecisionPtr =
    std::unique_ptr<curvex_decision, Deleter<curvex_decision, curvex_decision_free>>;
using ScenarioPtr =
    std::unique_ptr<curvex_scenario, Deleter<curvex_scenario, curvex_scenario_free>>;

int exit_code_for(curvex_status s) {
  switch (s) {
    case CURVEX_OK:
      return kExitOk;
    case CURVEX_ERR_INVALID_ARGUMENT:
    case CURVEX_ERR_PARSE:
    case CURVEX_ERR_PRECONDITION:
      return kExitInput;
    case CURVEX_ERR_GENERATION:
      return kExitGeneration;
    case CURVEX_ERR_INTERNAL:
      return kExitInternal;
  }
  return kExitInternal;
}

void check(curvex_status s, const std::string& context) {
  if (s == CURVEX_OK) return;
  std::cerr << "curvex: " << context << ": " << curvex_last_error() << "\n";
  throw Failure{exit_code_for(s)};
}

std::string take(char* s) {
  std::string out(s);
  curvex_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "curvex: cannot open " << path << "\n";
    throw Failure{kExitInput};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PointSetPtr load_points(const std::string& path) {
  const std::string text = read_input(path);
  curvex_pointset* raw = nullptr;
  check(curvex_pointset_parse(text.c_str(), &raw), path);
  return PointSetPtr(raw);
}

PolyPtr load_poly(const std::string& path) {
  const std::string text = read_input(path);
  curvex_poly* raw = nullptr;
  check(curvex_poly_parse(text.c_str(), &raw), path);
  return PolyPtr(raw);
}

DecisionPtr decide(const curvex_pointset* x, int m, int n) {
  curvex_decision* raw = nullptr;
  check(curvex_decide(x, m, n, &raw), "decide");
  return DecisionPtr(raw);
}

std::string decision_output(const curvex_decision* d, const std::string& mode) {
  char* s = nullptr;
  if (mode == "text") {
    check(curvex_decision_to_text(d, &s), "render");
  } else {
    check(curvex_decision_to_json(d, &s), "render");
  }
  return take(s);
}

nlohmann::ordered_json poly_json(const curvex_poly* p) {
  char* s = nullptr;
  check(curvex_poly_to_json(p, &s), "render");
  return nlohmann::ordered_json::parse(take(s));
}

std::string poly_text(const curvex_poly* p) {
  char* s = nullptr;
  check(curvex_poly_to_text(p, &s), "render");
  return take(s);
}

struct Options {
  int m = 0;
  int n = 0;
  int degree = 0;
  std::string output = "json";
  std::string input = "-";
  std::string poly_path;
  std::string kind;
  std::optional<std::uint64_t> seed;
  std::string suite_dir;
};

int run_check(const Options& o) {
  auto x = load_points(o.input);
  auto d = decide(x.get(), o.m, o.n);
  std::cout << decision_output(d.get(), o.output);
  return curvex_decision_verdict(d.get()) ? kExitOk : kExitNegative;
}

int run_witness(const Options& o) {
  auto x = load_points(o.input);
  auto d = decide(x.get(), o.m, o.n);
  if (!curvex_decision_verdict(d.get())) {
    std::cout << decision_output(d.get(), o.output);
    return kExitNegative;
  }
  curvex_poly* sm = nullptr;
  curvex_poly* sn = nullptr;
  check(curvex_decision_witnesses(d.get(), &sm, &sn), "witnesses");
  PolyPtr sigma_m(sm), sigma_n(sn);
  if (o.output == "text") {
    std::cout << "sigma_m: " << poly_text(sigma_m.get()) << "\n"
              << "sigma_n: " << poly_text(sigma_n.get()) << "\n";
  } else {
    nlohmann::ordered_json j;
    j["sigma_m"] = poly_json(sigma_m.get());
    j["sigma_n"] = poly_json(sigma_n.get());
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

int run_analyze(const Options& o) {
  auto x = load_points(o.input);
  char* s = nullptr;
  check(curvex_analyze(x.get(), o.degree, &s), "analyze");
  std::cout << take(s);
  return kExitOk;
}

ScenarioPtr suite_scenario(std::size_t i) {
  curvex_scenario* raw = nullptr;
  check(curvex_suite_scenario(i, &raw), "suite scenario " + std::to_string(i));
  return ScenarioPtr(raw);
}

int run_gen(const Options& o) {
  if (!o.suite_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(o.suite_dir);
    nlohmann::ordered_json manifest;
    manifest["count"] = curvex_suite_size();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < curvex_suite_size(); ++i) {
      auto s = suite_scenario(i);
      char* name = nullptr;
      char* body = nullptr;
      check(curvex_scenario_name(s.get(), &name), "name");
      check(curvex_scenario_to_json(s.get(), &body), "render");
      const std::string file = take(name) + ".json";
      const std::string text = take(body);
      std::ofstream(fs::path(o.suite_dir) / file, std::ios::binary) << text;
      const auto j = nlohmann::ordered_json::parse(text);
      nlohmann::ordered_json e;
      e["file"] = file;
      e["kind"] = j["kind"];
      e["m"] = j["m"];
      e["n"] = j["n"];
      e["seed"] = j["seed"];
      e["truth"] = j["truth"];
      entries.push_back(std::move(e));
    }
    manifest["scenarios"] = std::move(entries);
    std::ofstream(fs::path(o.suite_dir) / "manifest.json", std::ios::binary)
        << manifest.dump(2) << "\n";
    std::cout << "wrote " << curvex_suite_size() << " scenarios to "
              << o.suite_dir << "\n";
    return kExitOk;
  }
  if (o.kind.empty() || !o.seed || o.m == 0 || o.n == 0) {
    std::cerr << "curvex: gen needs --kind, --m, --n and --seed (or --suite)\n";
    return kExitInput;
  }
  curvex_scenario* raw = nullptr;
  check(curvex_scenario_generate(o.kind.c_str(), o.m, o.n, *o.seed, &raw), "gen");
  ScenarioPtr s(raw);
  char* body = nullptr;
  check(curvex_scenario_to_json(s.get(), &body), "render");
  std::cout << take(body);
  return kExitOk;
}

int run_noether(const Options& o) {
  auto p = load_poly(o.poly_path);
  auto x = load_points(o.input);
  auto d = decide(x.get(), o.m, o.n);
  if (!curvex_decision_verdict(d.get())) {
    std::cout << decision_output(d.get(), "json");
    return kExitNegative;
  }
  curvex_poly* sm = nullptr;
  curvex_poly* sn = nullptr;
  check(curvex_decision_witnesses(d.get(), &sm, &sn), "witnesses");
  PolyPtr sigma_m(sm), sigma_n(sn);
  curvex_poly* a = nullptr;
  curvex_poly* b = nullptr;
  check(curvex_noether(p.get(), sigma_m.get(), sigma_n.get(), x.get(), &a, &b),
        "noether");
  PolyPtr pa(a), pb(b);
  nlohmann::ordered_json j;
  j["sigma_m"] = poly_json(sigma_m.get());
  j["sigma_n"] = poly_json(sigma_n.get());
  j["A"] = poly_json(pa.get());
  j["B"] = poly_json(pb.get());
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run_cb_verify(const Options& o) {
  auto x = load_points(o.input);
  int flags[3] = {0, 0, 0};
  check(curvex_cayley_bacharach(x.get(), o.m, o.n, flags), "cb-verify");
  nlohmann::ordered_json j;
  j["kappa"] = o.m + o.n - 3;
  j["essentially_dependent"] = flags[0] == 1;
  j["next_degree_independent"] = flags[1] == 1;
  j["punctured_independent"] = flags[2] == 1;
  const bool all = flags[0] && flags[1] && flags[2];
  j["all"] = all;
  std::cout << j.dump(2) << "\n";
  return all ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether a rational point set is the intersection of two "
               "plane curves of degrees m and n"};
  app.require_subcommand(1);
  Options o;

  auto add_degrees = [&o](CLI::App* sub) {
    sub->add_option("--m", o.m, "degree of the first curve")->required();
    sub->add_option("--n", o.n, "degree of the second curve")->required();
  };
  auto add_input = [&o](CLI::App* sub) {
    sub->add_option("input", o.input, "point set JSON file, or - for stdin")
        ->required();
  };
  auto add_output = [&o](CLI::App* sub) {
    sub->add_option("--output", o.output, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* check_cmd = app.add_subcommand("check", "decide and print the verdict");
  add_degrees(check_cmd);
  add_output(check_cmd);
  add_input(check_cmd);

  auto* witness_cmd =
      app.add_subcommand("witness", "print the witness curves of a positive verdict");
  add_degrees(witness_cmd);
  add_output(witness_cmd);
  add_input(witness_cmd);

  auto* analyze_cmd =
      app.add_subcommand("analyze", "independence report at one degree");
  analyze_cmd->add_option("--degree", o.degree, "degree n")->required();
  add_input(analyze_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "generate scenarios");
  gen_cmd->add_option("--kind", o.kind, "scenario kind");
  gen_cmd->add_option("--m", o.m, "degree of the first curve");
  gen_cmd->add_option("--n", o.n, "degree of the second curve");
  gen_cmd->add_option("--seed", o.seed, "64-bit seed");
  gen_cmd->add_option("--suite", o.suite_dir,
                      "write the full acceptance corpus into this directory");

  auto* noether_cmd =
      app.add_subcommand("noether", "decompose p = A*sigma_m + B*sigma_n");
  add_degrees(noether_cmd);
  noether_cmd->add_option("--p", o.poly_path, "polynomial JSON file")->required();
  add_input(noether_cmd);

  auto* cb_cmd = app.add_subcommand("cb-verify", "Cayley-Bacharach properties");
  add_degrees(cb_cmd);
  add_input(cb_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*check_cmd) return run_check(o);
    if (*witness_cmd) return run_witness(o);
    if (*analyze_cmd) return run_analyze(o);
    if (*gen_cmd) return run_gen(o);
    if (*noether_cmd) return run_noether(o);
    if (*cb_cmd) return run_cb_verify(o);
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "curvex: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
