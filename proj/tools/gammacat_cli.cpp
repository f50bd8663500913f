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

// Command-line front end. Flags are assembled into a JSON request and
// handed to the shared library through the C interface; reports are printed
// verbatim, so identical invocations produce identical bytes.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gammacat.h"

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string input_path;
  std::string inline_json;
};

void add_common(CLI::App *cmd, Common &c) {
  cmd->add_option("-i,--input", c.input_path,
                  "JSON file merged into the request");
  cmd->add_option("--json", c.inline_json, "inline JSON merged into the request");
}

Json load_json(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open '" << path << "'\n";
    std::exit(2);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception &e) {
    std::cerr << "'" << path << "' is not valid JSON: " << e.what() << "\n";
    std::exit(2);
  }
}

void merge_common(Json &request, const Common &c) {
  auto merge = [&](const Json &j) {
    if (!j.is_object()) {
      std::cerr << "merged JSON must be an object\n";
      std::exit(2);
    }
    for (const auto &[k, v] : j.items()) request[k] = v;
  };
  if (!c.input_path.empty()) merge(load_json(c.input_path));
  if (!c.inline_json.empty()) {
    try {
      merge(Json::parse(c.inline_json));
    } catch (const nlohmann::json::exception &e) {
      std::cerr << "--json is not valid JSON: " << e.what() << "\n";
      std::exit(2);
    }
  }
}

std::vector<std::string> split_csv(const std::string &csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

int run(const std::string &command, const Json &request,
        const std::string &artifact_path) {
  gammacat_ctx *ctx = gammacat_ctx_new();
  char *report = nullptr;
  gammacat_status st =
      gammacat_run(ctx, command.c_str(), request.dump().c_str(), &report);
  int rc;
  if (st == GAMMACAT_OK) {
    std::string text = report ? report : "";
    if (!artifact_path.empty()) {
      // peel the artifact out of an export report and write it separately
      Json parsed = Json::parse(text);
      if (parsed.contains("artifact")) {
        std::ofstream out(artifact_path);
        out << parsed["artifact"].dump(2) << "\n";
        parsed["written"] = artifact_path;
        parsed.erase("artifact");
        text = parsed.dump(2) + "\n";
      }
    }
    std::fputs(text.c_str(), stdout);
    rc = 0;
  } else {
    std::fputs(gammacat_last_error(ctx), stdout);
    rc = st == GAMMACAT_ERR_USAGE ? 2 : 1;
  }
  gammacat_string_free(report);
  gammacat_ctx_free(ctx);
  return rc;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"probabilistic and quantum categorical structures"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gammacat_version()));

  std::string command;
  Json request = Json::object();
  std::string artifact_path;

  // validate -------------------------------------------------------------
  Common validate_common;
  std::string validate_type;
  double validate_delta = 0;
  auto *validate = app.add_subcommand("validate", "validate a typed value");
  validate->add_option("--type", validate_type, "value type")->required();
  validate->add_option("--delta", validate_delta, "gap for hamiltonians");
  add_common(validate, validate_common);
  validate->callback([&] {
    command = "validate";
    Json value = Json::object();
    if (!validate_common.input_path.empty())
      value = load_json(validate_common.input_path);
    else if (!validate_common.inline_json.empty())
      value = Json::parse(validate_common.inline_json);
    request["type"] = validate_type;
    request["value"] = value;
    if (validate->count("--delta")) request["delta"] = validate_delta;
  });

  // loss -------------------------------------------------------------------
  Common loss_common;
  double loss_scale = 1.0;
  auto *loss = app.add_subcommand("loss", "information loss of a pipeline");
  loss->add_option("--scale", loss_scale, "multiplicative constant C");
  add_common(loss, loss_common);
  loss->callback([&] {
    command = "loss";
    Json in = Json::object();
    if (!loss_common.input_path.empty()) in = load_json(loss_common.input_path);
    else if (!loss_common.inline_json.empty())
      in = Json::parse(loss_common.inline_json);
    if (in.is_array())
      request["pipeline"] = in;
    else if (in.contains("pipeline"))
      request["pipeline"] = in["pipeline"];
    if (loss->count("--scale")) request["scale"] = loss_scale;
  });

  // coproduct ---------------------------------------------------------------
  Common cop_common;
  std::string cop_kind = "fp-morphisms";
  auto *cop = app.add_subcommand("coproduct", "coproducts and copairings");
  cop->add_option("--kind", cop_kind,
                  "fp-objects | fp-morphisms | ps-objects | ps-copair | "
                  "qc-objects");
  add_common(cop, cop_common);
  cop->callback([&] {
    command = "coproduct";
    merge_common(request, cop_common);
    request["kind"] = cop_kind;
  });

  // nerve ---------------------------------------------------------------------
  Common nerve_common;
  std::string nerve_category;
  int nerve_nmax = 2;
  std::uint64_t nerve_bound = 1000000;
  auto *nerve = app.add_subcommand("nerve", "cubical nerve of a finite category");
  nerve->add_option("--category", nerve_category, "category JSON file");
  nerve->add_option("--nmax", nerve_nmax, "truncation dimension");
  nerve->add_option("--bound", nerve_bound, "explosion guard");
  add_common(nerve, nerve_common);
  nerve->callback([&] {
    command = "nerve";
    merge_common(request, nerve_common);
    if (!nerve_category.empty())
      request["category"] = load_json(nerve_category);
    request["nmax"] = nerve_nmax;
    request["bound"] = nerve_bound;
  });

  // summing ---------------------------------------------------------------
  Common summing_common;
  std::string summing_kind = "classical";
  std::string summing_lambda, summing_alpha, summing_theta;
  std::uint32_t summing_subset = 0;
  std::size_t summing_n = 1;
  auto *summing = app.add_subcommand("summing", "summing functor evaluation");
  summing->add_option("--kind", summing_kind,
                      "classical | quantum | descriptor");
  summing->add_option("--lambda", summing_lambda, "rationals, comma separated");
  summing->add_option("--alpha", summing_alpha, "rationals, comma separated");
  summing->add_option("--theta", summing_theta, "reals, comma separated");
  summing->add_option("--subset", summing_subset, "pointed-subset bitmask");
  summing->add_option("--n", summing_n, "number of non-base points");
  add_common(summing, summing_common);
  summing->callback([&] {
    command = "summing";
    merge_common(request, summing_common);
    request["kind"] = summing_kind;
    if (!summing_lambda.empty()) request["lambda"] = split_csv(summing_lambda);
    if (!summing_alpha.empty()) request["alpha"] = split_csv(summing_alpha);
    if (!summing_theta.empty()) {
      Json theta = Json::array();
      for (const auto &t : split_csv(summing_theta))
        theta.push_back(std::stod(t));
      request["theta"] = theta;
    }
    if (summing->count("--subset")) request["subset"] = summing_subset;
    if (summing->count("--n")) request["n"] = summing_n;
  });

  // strata ------------------------------------------------------------------
  Common strata_common;
  std::string strata_kind = "quantum";
  std::string strata_alpha;
  std::size_t strata_n = 1;
  double strata_beta = 1.0, strata_delta = 1.0;
  auto *strata = app.add_subcommand("strata", "realization strata descriptors");
  strata->add_option("--kind", strata_kind, "quantum | gapped");
  strata->add_option("--n", strata_n, "number of non-base points")->required();
  strata->add_option("--beta", strata_beta, "inverse temperature (gapped)");
  strata->add_option("--delta", strata_delta, "gap (gapped)");
  strata->add_option("--alpha", strata_alpha,
                     "membership query, comma separated");
  add_common(strata, strata_common);
  strata->callback([&] {
    command = "strata";
    merge_common(request, strata_common);
    request["kind"] = strata_kind;
    request["n"] = strata_n;
    if (strata->count("--beta")) request["beta"] = strata_beta;
    if (strata->count("--delta")) request["delta"] = strata_delta;
    if (!strata_alpha.empty()) {
      Json alpha = Json::array();
      for (const auto &a : split_csv(strata_alpha)) {
        if (strata_kind == "quantum")
          alpha.push_back(a);
        else
          alpha.push_back(std::stod(a));
      }
      request["alpha"] = alpha;
    }
  });

  // gap-locus --------------------------------------------------------------
  double gl_beta = 1.0, gl_delta = 1.0;
  auto *gl = app.add_subcommand("gap-locus", "feasibility locus of the gap");
  gl->add_option("--beta", gl_beta, "inverse temperature")->required();
  gl->add_option("--delta", gl_delta, "gap")->required();
  gl->callback([&] {
    command = "gap-locus";
    request["beta"] = gl_beta;
    request["delta"] = gl_delta;
  });

  // gap-check ---------------------------------------------------------------
  Common gc_common;
  double gc_beta = 1.0, gc_delta = 1.0, gc_tol = 1e-9;
  auto *gc = app.add_subcommand("gap-check",
                                "gap-preserving channel membership (T_Delta)");
  gc->add_option("--beta", gc_beta, "inverse temperature")->required();
  gc->add_option("--delta", gc_delta, "gap")->required();
  gc->add_option("--tolerance", gc_tol, "comparison tolerance");
  add_common(gc, gc_common);
  gc->callback([&] {
    command = "gap-check";
    merge_common(request, gc_common);
    request["beta"] = gc_beta;
    request["delta"] = gc_delta;
    if (gc->count("--tolerance")) request["tolerance"] = gc_tol;
  });

  // axiom-suite ---------------------------------------------------------------
  std::string ax_functional = "shannon";
  std::size_t ax_instances = 500;
  std::uint64_t ax_seed = 0;
  double ax_tol = 1e-12;
  auto *ax = app.add_subcommand("axiom-suite",
                                "information-loss axiom property suite");
  ax->add_option("--functional", ax_functional, "shannon | shannon-squared");
  ax->add_option("--instances", ax_instances, "instances per axiom");
  ax->add_option("--seed", ax_seed, "generator seed");
  ax->add_option("--tolerance", ax_tol, "residual tolerance");
  ax->callback([&] {
    command = "axiom-suite";
    request["functional"] = ax_functional;
    request["instances"] = ax_instances;
    request["seed"] = ax_seed;
    request["tolerance"] = ax_tol;
  });

  // export ------------------------------------------------------------------
  Common ex_common;
  std::string ex_what = "nerve-complex";
  std::string ex_category;
  int ex_nmax = 2;
  std::size_t ex_n = 1;
  double ex_beta = 1.0, ex_delta = 1.0;
  auto *ex = app.add_subcommand("export", "write complexes and descriptors");
  ex->add_option("--what", ex_what,
                 "nerve-complex | classical-descriptor | gapped-descriptor");
  ex->add_option("--category", ex_category, "category JSON file");
  ex->add_option("--nmax", ex_nmax, "truncation dimension");
  ex->add_option("--n", ex_n, "number of non-base points");
  ex->add_option("--beta", ex_beta, "inverse temperature");
  ex->add_option("--delta", ex_delta, "gap");
  ex->add_option("-o,--out", artifact_path, "output file for the artifact");
  add_common(ex, ex_common);
  ex->callback([&] {
    command = "export";
    merge_common(request, ex_common);
    request["what"] = ex_what;
    if (!ex_category.empty()) request["category"] = load_json(ex_category);
    if (ex->count("--nmax")) request["nmax"] = ex_nmax;
    if (ex->count("--n")) request["n"] = ex_n;
    if (ex->count("--beta")) request["beta"] = ex_beta;
    if (ex->count("--delta")) request["delta"] = ex_delta;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }
  return run(command, request, artifact_path);
}
