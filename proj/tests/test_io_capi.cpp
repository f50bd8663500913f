// Copyright 2026 The gammacat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <string>

#include "gammacat.h"
#include "gammacat/runner.hpp"

using namespace gammacat;
using Json = io::Json;

TEST_CASE("rationals are strings; floats are rejected") {
  Json p = {{"labels", {"a", "b"}}, {"probs", {"1/2", "1/2"}}};
  CHECK_NOTHROW(io::probability_from_json(p));
  Json bad = {{"labels", {"a", "b"}}, {"probs", {0.5, 0.5}}};
  CHECK_THROWS_WITH_AS(io::probability_from_json(bad),
                       doctest::Contains("floats are rejected"), Error);
}

TEST_CASE("unknown fields are rejected") {
  Json p = {{"labels", {"a"}}, {"probs", {"1"}}, {"extra", 1}};
  CHECK_THROWS_WITH_AS(io::probability_from_json(p),
                       doctest::Contains("unknown field"), Error);
}

TEST_CASE("morphism and prob morphism round trip through JSON") {
  Json m = Json::parse(R"({
    "source": {"labels": ["a", "b"], "probs": ["1/3", "2/3"]},
    "target": {"labels": ["y"], "probs": ["1"]},
    "matrix": [["1", "1"]]
  })");
  auto s = io::morphism_from_json(m);
  CHECK(io::to_json(s) == io::to_json(io::morphism_from_json(io::to_json(s))));

  Json pm = Json::parse(R"({
    "source": {"terms": [{"w": "1", "set": {"size": 2, "base": 0}}]},
    "target": {"terms": [{"w": "1", "set": {"size": 2, "base": 0}}]},
    "stoch": [["1"]],
    "families": {"0,0": [{"map": [0, 1], "w": "1/2"},
                          {"map": [0, 0], "w": "1/2"}]}
  })");
  auto phi = io::prob_morphism_from_json(pm);
  CHECK(io::to_json(phi) ==
        io::to_json(io::prob_morphism_from_json(io::to_json(phi))));
}

TEST_CASE("reports are byte-stable across repeated runs") {
  Json req = {{"beta", 1.0}, {"delta", 2.7}};
  auto a = runner::run_command_text("gap-locus", req.dump());
  auto b = runner::run_command_text("gap-locus", req.dump());
  CHECK(a == b);
  // round-trip stability: parse and re-dump
  auto parsed = Json::parse(a);
  CHECK(parsed.dump(2) + "\n" == a);
  CHECK(parsed["locus"]["feasible"].get<bool>());
  CHECK(parsed["version"].get<std::string>() == runner::kVersion);
}

TEST_CASE("axiom-suite command is deterministic for a fixed seed") {
  Json req = {{"functional", "shannon"}, {"instances", 40}, {"seed", 5}};
  auto a = runner::run_command_text("axiom-suite", req.dump());
  auto b = runner::run_command_text("axiom-suite", req.dump());
  CHECK(a == b);
  CHECK(Json::parse(a)["all_pass"].get<bool>());
}

TEST_CASE("loss pipeline reports per-step and total losses") {
  Json pipeline = Json::array();
  pipeline.push_back(Json::parse(R"({
    "source": {"labels": ["a", "b"], "probs": ["1/2", "1/2"]},
    "target": {"labels": ["c", "d"], "probs": ["1/2", "1/2"]},
    "matrix": [["0", "1"], ["1", "0"]]
  })"));
  pipeline.push_back(Json::parse(R"({
    "source": {"labels": ["c", "d"], "probs": ["1/2", "1/2"]},
    "target": {"labels": ["z"], "probs": ["1"]},
    "matrix": [["1", "1"]]
  })"));
  auto report = Json::parse(
      runner::run_command_text("loss", Json{{"pipeline", pipeline}}.dump()));
  CHECK(report["additivity_residual"].get<double>() < 1e-12);
  CHECK(report["total"].get<double>() ==
        doctest::Approx(-std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("C API surfaces reports and structured errors") {
  gammacat_ctx *ctx = gammacat_ctx_new();
  REQUIRE(ctx != nullptr);
  CHECK(std::string(gammacat_version()) == runner::kVersion);

  char *out = nullptr;
  auto st = gammacat_run(ctx, "gap-locus",
                         R"({"beta": 1.0, "delta": 2.7})", &out);
  CHECK(st == GAMMACAT_OK);
  REQUIRE(out != nullptr);
  std::string first(out);
  gammacat_string_free(out);
  out = nullptr;
  gammacat_run(ctx, "gap-locus", R"({"beta": 1.0, "delta": 2.7})", &out);
  CHECK(first == out);
  gammacat_string_free(out);
  out = nullptr;

  // domain error: a column that does not sum to one
  st = gammacat_run(ctx, "validate", R"({
    "type": "morphism",
    "value": {
      "source": {"labels": ["a"], "probs": ["1"]},
      "target": {"labels": ["y", "z"], "probs": ["1/3", "2/3"]},
      "matrix": [["1/3"], ["1/3"]]
    }
  })",
                    &out);
  CHECK(st == GAMMACAT_ERR_DOMAIN);
  CHECK(out == nullptr);
  auto err = Json::parse(gammacat_last_error(ctx));
  CHECK(err["error"]["kind"].get<std::string>() == "ColumnNotStochastic");

  // usage error: unknown command
  st = gammacat_run(ctx, "frobnicate", "{}", &out);
  CHECK(st == GAMMACAT_ERR_USAGE);

  gammacat_ctx_free(ctx);
}

TEST_CASE("validate command surfaces density diagnostics") {
  Json req = {{"type", "density"},
              {"value",
               {{"dim", 2},
                {"entries",
                 {{{{"re", 0.5}, {"im", 0.0}}, {{"re", 0.5}, {"im", 0.0}}},
                  {{{"re", 0.5}, {"im", 0.0}}, {{"re", 0.5}, {"im", 0.0}}}}}}}};
  auto report = Json::parse(runner::run_command_text("validate", req.dump()));
  CHECK(report["valid"].get<bool>());
  CHECK(report["eigenvalues"].size() == 2);
}

TEST_CASE("nerve command matches the library computation") {
  Json z2 = io::to_json(category::cyclic_group_category(2));
  auto report = Json::parse(runner::run_command_text(
      "nerve", Json{{"category", z2}, {"nmax", 2}}.dump()));
  CHECK(report["levels"] == Json::array({1, 2, 8}));
  CHECK_FALSE(report["chi_exact"].get<bool>());
}
