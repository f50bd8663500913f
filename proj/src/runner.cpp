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

#include "gammacat/runner.hpp"

#include <cmath>

#include "gammacat/infoloss.hpp"

namespace gammacat::runner {

using io::Json;

namespace {

Json envelope(const std::string &command) {
  Json out;
  out["version"] = kVersion;
  out["command"] = command;
  return out;
}

double real_field(const Json &req, const char *key, double fallback) {
  auto it = req.find(key);
  if (it == req.end()) return fallback;
  return it->get<double>();
}

//---------------------------------------------------------------------------

Json cmd_validate(const Json &req) {
  io::expect_keys(req, {"type", "value", "delta", "tolerance"}, "validate");
  const std::string type = io::require(req, "type", "validate").get<std::string>();
  const Json &value = io::require(req, "value", "validate");
  Json out = envelope("validate");
  out["type"] = type;
  if (type == "probability") {
    auto p = io::probability_from_json(value);
    out["valid"] = true;
    out["points"] = p.size();
  } else if (type == "morphism") {
    auto s = io::morphism_from_json(value);
    out["valid"] = true;
    out["shape"] = Json::array({s.target.size(), s.source.size()});
  } else if (type == "pointed-set") {
    io::pointed_set_from_json(value);
    out["valid"] = true;
  } else if (type == "prob-pointed-set") {
    auto x = io::prob_pointed_set_from_json(value);
    out["valid"] = true;
    out["terms"] = x.term_count();
  } else if (type == "prob-morphism") {
    auto phi = io::prob_morphism_from_json(value);
    out["valid"] = true;
    out["shape"] = Json::array({phi.target.term_count(), phi.source.term_count()});
  } else if (type == "density") {
    auto d = io::density_from_json(value);
    out["valid"] = true;
    Json eigs = Json::array();
    for (double e : d.eigenvalues) eigs.push_back(io::jreal(e));
    out["eigenvalues"] = eigs;
  } else if (type == "channel") {
    auto c = io::channel_from_json(value);
    out["valid"] = true;
    out["dims"] = Json::array({c.dim_in, c.dim_out});
    out["kraus_rank"] = c.kraus.size();
  } else if (type == "hamiltonian") {
    double delta = real_field(req, "delta", 0.0);
    auto h = gapped::validate_gapped(
        io::cmatrix_from_json(io::require(value, "entries", "hamiltonian"),
                              "hamiltonian.entries"),
        delta != 0.0 ? delta
                     : io::require(value, "delta", "hamiltonian").get<double>());
    out["valid"] = true;
    Json spec = Json::array();
    for (double e : h.spectrum) spec.push_back(io::jreal(e));
    out["spectrum"] = spec;
  } else if (type == "cubical") {
    auto k = io::cubical_from_json(value);
    out["valid"] = true;
    out["levels"] = k.level_sizes;
  } else {
    fail("UsageError", "unknown validate type '" + type + "'");
  }
  return out;
}

Json cmd_loss(const Json &req) {
  io::expect_keys(req, {"pipeline", "scale"}, "loss");
  double scale = real_field(req, "scale", 1.0);
  const Json &pipe = io::require(req, "pipeline", "loss");
  if (!pipe.is_array() || pipe.empty())
    fail("ParseError", "loss: pipeline is a nonempty array of morphisms");
  std::vector<finprob::StochasticMorphism> steps;
  for (const auto &e : pipe) steps.push_back(io::morphism_from_json(e));
  for (std::size_t i = 0; i + 1 < steps.size(); ++i)
    if (!(steps[i].target == steps[i + 1].source))
      fail("SourceTargetMismatch",
           "loss: step " + std::to_string(i + 1) +
               " does not start where step " + std::to_string(i) + " ends");
  Json out = envelope("loss");
  Json list = Json::array();
  double total = 0;
  finprob::StochasticMorphism composite = steps[0];
  for (std::size_t i = 0; i < steps.size(); ++i) {
    double l = infoloss::loss_fp(steps[i], scale);
    total += l;
    if (i > 0) composite = finprob::compose(steps[i], composite);
    Json e;
    e["step"] = i;
    e["loss"] = io::jreal(l);
    list.push_back(e);
  }
  double comp = infoloss::loss_fp(composite, scale);
  out["steps"] = list;
  out["total"] = io::jreal(total);
  out["composite_loss"] = io::jreal(comp);
  out["additivity_residual"] = io::jreal(std::abs(total - comp));
  return out;
}

Json cmd_coproduct(const Json &req) {
  io::expect_keys(req, {"kind", "left", "right"}, "coproduct");
  const std::string kind = io::require(req, "kind", "coproduct").get<std::string>();
  const Json &left = io::require(req, "left", "coproduct");
  const Json &right = io::require(req, "right", "coproduct");
  Json out = envelope("coproduct");
  out["kind"] = kind;
  if (kind == "fp-objects") {
    auto p = io::probability_from_json(left);
    auto q = io::probability_from_json(right);
    out["object"] = io::to_json(finprob::coproduct_objects(p, q));
  } else if (kind == "fp-morphisms") {
    auto s = io::morphism_from_json(left);
    auto s2 = io::morphism_from_json(right);
    auto cp = finprob::coproduct_morphisms(s, s2);
    out["object"] = io::to_json(cp.object);
    out["in_left"] = io::to_json(cp.in_left);
    out["in_right"] = io::to_json(cp.in_right);
    out["copair"] = io::to_json(cp.copair);
    bool left_id = finprob::compose(cp.copair, cp.in_left) == s;
    bool right_id = finprob::compose(cp.copair, cp.in_right) == s2;
    bool transport =
        mat_vec(cp.copair.matrix, cp.object.probs) == s.target.probs;
    out["checks"] = Json{{"copair_after_in_left", left_id},
                         {"copair_after_in_right", right_id},
                         {"transports_product_measure", transport}};
  } else if (kind == "ps-objects") {
    auto x = io::prob_pointed_set_from_json(left);
    auto y = io::prob_pointed_set_from_json(right);
    auto cp = probcat::coproduct_ps(x, y);
    out["object"] = io::to_json(cp.object);
    out["in_left"] = io::to_json(cp.in_left);
    out["in_right"] = io::to_json(cp.in_right);
  } else if (kind == "ps-copair") {
    auto phi = io::prob_morphism_from_json(left);
    auto phi2 = io::prob_morphism_from_json(right);
    auto copair = probcat::copair_ps(phi, phi2);
    auto cp = probcat::coproduct_ps(phi.source, phi2.source);
    out["copair"] = io::to_json(copair);
    out["checks"] = Json{
        {"copair_after_in_left",
         probcat::prob_equal(probcat::compose_prob(copair, cp.in_left), phi)},
        {"copair_after_in_right",
         probcat::prob_equal(probcat::compose_prob(copair, cp.in_right),
                             phi2)}};
  } else if (kind == "qc-objects") {
    auto a = io::density_from_json(left);
    auto b = io::density_from_json(right);
    auto prod = quantum::validate_density(quantum::kron(a.rho, b.rho));
    out["rho"] = io::to_json(prod);
    out["trace"] = io::jreal(prod.rho.trace().real());
  } else {
    fail("UsageError", "unknown coproduct kind '" + kind + "'");
  }
  return out;
}

Json cmd_nerve(const Json &req) {
  io::expect_keys(req, {"category", "nmax", "bound"}, "nerve");
  auto cat = io::category_from_json(io::require(req, "category", "nerve"));
  int nmax = io::require(req, "nmax", "nerve").get<int>();
  std::uint64_t bound = req.contains("bound")
                            ? req["bound"].get<std::uint64_t>()
                            : 1000000;
  auto k = cubical::cubical_nerve(cat, nmax, bound);
  auto euler = cubical::reduced_euler(k);
  Json out = envelope("nerve");
  out["levels"] = k.level_sizes;
  out["nondegenerate"] = cubical::nondegenerate_counts(k);
  out["chi_reduced"] = euler.chi_reduced;
  out["chi_exact"] = euler.exact;
  out["complex"] = io::to_json(k);
  return out;
}

Json cmd_summing(const Json &req) {
  io::expect_keys(req, {"kind", "lambda", "alpha", "theta", "subset", "n",
                        "samples"},
                  "summing");
  const std::string kind = io::require(req, "kind", "summing").get<std::string>();
  Json out = envelope("summing");
  out["kind"] = kind;
  if (kind == "classical") {
    auto f = summing::make_classical(io::rational_vector_from_json(
        io::require(req, "lambda", "summing"), "summing.lambda"));
    if (req.contains("subset")) {
      std::uint32_t mask = req["subset"].get<std::uint32_t>();
      out["subset"] = mask;
      out["value"] = io::to_json(summing::classical_evaluate(f, mask));
      out["pattern_weight"] = io::jrat(summing::pattern_weight(f, mask));
    } else {
      auto table = summing::classical_table(f);
      Json values = Json::array();
      for (std::uint32_t m = 0; m < table.value.size(); ++m) {
        Json e;
        e["subset"] = m;
        e["value"] = io::to_json(table.value[m]);
        values.push_back(e);
      }
      out["table"] = values;
      auto report = summing::verify_summing(table);
      out["summing_law"] = report.pass;
      Json viol = Json::array();
      for (const auto &v : report.violations) {
        Json e;
        e["left"] = v.left_mask;
        e["right"] = v.right_mask;
        e["detail"] = v.detail;
        viol.push_back(e);
      }
      out["violations"] = viol;
    }
  } else if (kind == "quantum") {
    RationalVector alpha = io::rational_vector_from_json(
        io::require(req, "alpha", "summing"), "summing.alpha");
    std::vector<quantum::Complex> theta;
    for (const auto &t : io::require(req, "theta", "summing"))
      theta.push_back(io::complex_from_json(t, "summing.theta"));
    auto f = quantum::make_quantum_summing(alpha, theta);
    std::uint32_t mask = req.contains("subset")
                             ? req["subset"].get<std::uint32_t>()
                             : (std::uint32_t(1) << f.points()) - 1;
    auto eval = quantum::quantum_evaluate(f, mask);
    out["subset"] = mask;
    out["rho"] = io::to_json(eval.object.rho);
    out["labels"] = eval.object.entry_labels;
    out["diagonal"] = io::jrat(eval.diagonal);
    // exact diagonal match against the classical evaluation
    auto classical = summing::classical_evaluate(
        summing::make_classical(alpha), mask);
    bool match = classical.terms.size() == eval.diagonal.size();
    for (std::size_t i = 0; match && i < eval.diagonal.size(); ++i)
      match = classical.terms[i].weight == eval.diagonal[i];
    out["diagonal_matches_classical"] = match;
  } else if (kind == "descriptor") {
    std::size_t n = io::require(req, "n", "summing").get<std::size_t>();
    auto d = summing::classical_realization_descriptor(n);
    out["descriptor"] = io::to_json(d);
    if (req.contains("samples")) {
      Json samples = Json::array();
      for (const auto &zj : req["samples"]) {
        RationalVector z =
            io::rational_vector_from_json(zj, "summing.samples");
        if (z.size() != n)
          fail("ParseError", "summing: sample has wrong length");
        Json e;
        e["Z"] = io::jrat(z);
        Json verts = Json::array();
        for (const auto &v : summing::cube_vertices(z))
          verts.push_back(io::jrat(v));
        e["vertices"] = verts;
        samples.push_back(e);
      }
      out["samples"] = samples;
    }
  } else {
    fail("UsageError", "unknown summing kind '" + kind + "'");
  }
  return out;
}

Json cmd_strata(const Json &req) {
  io::expect_keys(req, {"kind", "n", "beta", "delta", "alpha"}, "strata");
  const std::string kind = io::require(req, "kind", "strata").get<std::string>();
  std::size_t n = io::require(req, "n", "strata").get<std::size_t>();
  Json out = envelope("strata");
  if (kind == "quantum") {
    out["descriptor"] = io::to_json(quantum::quantum_strata_descriptor(n));
    if (req.contains("alpha")) {
      RationalVector alpha = io::rational_vector_from_json(
          req["alpha"], "strata.alpha");
      out["stratum"] = quantum::stratum_of(alpha);
      Json bounds = Json::array();
      for (const auto &a : alpha) {
        auto b = quantum::theta_bounds(rat_double(a));
        Json e;
        e["alpha"] = io::jrat(a);
        e["outer_radius_sq"] = io::jreal(b.outer_sq);
        e["inner_radius_sq"] = io::jreal(b.inner_sq);
        e["shape"] = b.shape;
        bounds.push_back(e);
      }
      out["theta_bounds"] = bounds;
    }
  } else if (kind == "gapped") {
    double beta = io::require(req, "beta", "strata").get<double>();
    double delta = io::require(req, "delta", "strata").get<double>();
    out["descriptor"] =
        io::to_json(gapped::gapped_realization_descriptor(n, beta, delta));
    if (req.contains("alpha")) {
      std::vector<double> alpha;
      for (const auto &a : req["alpha"]) alpha.push_back(a.get<double>());
      out["stratum"] =
          gapped::gapped_stratum_of(gapped::gap_locus(beta, delta), alpha);
    }
  } else {
    fail("UsageError", "unknown strata kind '" + kind + "'");
  }
  return out;
}

Json cmd_gap_locus(const Json &req) {
  io::expect_keys(req, {"beta", "delta"}, "gap-locus");
  auto locus = gapped::gap_locus(io::require(req, "beta", "gap-locus").get<double>(),
                                 io::require(req, "delta", "gap-locus").get<double>());
  Json out = envelope("gap-locus");
  out["locus"] = io::to_json(locus);
  return out;
}

Json cmd_gap_check(const Json &req) {
  io::expect_keys(req, {"channel", "h_source", "h_target", "beta", "delta",
                        "tolerance"},
                  "gap-check");
  double beta = io::require(req, "beta", "gap-check").get<double>();
  double delta = io::require(req, "delta", "gap-check").get<double>();
  double tol = real_field(req, "tolerance", quantum::kSpectralTol);
  auto channel = io::channel_from_json(io::require(req, "channel", "gap-check"));
  auto read_h = [&](const Json &j) {
    io::expect_keys(j, {"dim", "entries", "delta"}, "hamiltonian");
    return gapped::validate_gapped(
        io::cmatrix_from_json(io::require(j, "entries", "hamiltonian"),
                              "hamiltonian.entries"),
        delta);
  };
  auto h = read_h(io::require(req, "h_source", "gap-check"));
  auto h2 = read_h(io::require(req, "h_target", "gap-check"));
  Json out = envelope("gap-check");
  out["gap_preserving"] = gapped::is_gap_preserving(channel, h, h2, beta, tol);
  out["beta"] = io::jreal(beta);
  out["delta"] = io::jreal(delta);
  return out;
}

Json cmd_axiom_suite(const Json &req) {
  io::expect_keys(req, {"functional", "instances", "seed", "tolerance"},
                  "axiom-suite");
  infoloss::LossFunctional fn;
  const std::string name =
      req.contains("functional") ? req["functional"].get<std::string>()
                                 : "shannon";
  if (name == "shannon")
    fn.kind = infoloss::LossFunctional::Kind::ShannonDifference;
  else if (name == "shannon-squared")
    fn.kind = infoloss::LossFunctional::Kind::ShannonSquaredDifference;
  else
    fail("UsageError", "unknown functional '" + name + "'");
  std::size_t instances =
      req.contains("instances") ? req["instances"].get<std::size_t>() : 500;
  std::uint64_t seed = req.contains("seed") ? req["seed"].get<std::uint64_t>() : 0;
  double tol = real_field(req, "tolerance", 1e-12);
  auto results = infoloss::axiom_suite(fn, instances, seed, tol);
  Json out = envelope("axiom-suite");
  out["functional"] = name;
  out["seed"] = seed;
  Json list = Json::array();
  bool all = true;
  for (const auto &r : results) {
    Json e;
    e["axiom"] = r.axiom;
    e["max_residual"] = io::jreal(r.max_residual);
    e["instances"] = r.instances;
    e["pass"] = r.pass;
    all = all && r.pass;
    list.push_back(e);
  }
  out["results"] = list;
  out["all_pass"] = all;
  return out;
}

Json cmd_export(const Json &req) {
  io::expect_keys(req, {"what", "category", "nmax", "bound", "n", "samples",
                        "beta", "delta"},
                  "export");
  const std::string what = io::require(req, "what", "export").get<std::string>();
  Json out = envelope("export");
  out["what"] = what;
  if (what == "nerve-complex") {
    auto cat = io::category_from_json(io::require(req, "category", "export"));
    int nmax = io::require(req, "nmax", "export").get<int>();
    std::uint64_t bound = req.contains("bound")
                              ? req["bound"].get<std::uint64_t>()
                              : 1000000;
    out["artifact"] = io::to_json(cubical::cubical_nerve(cat, nmax, bound));
  } else if (what == "classical-descriptor") {
    Json sub;
    sub["kind"] = "descriptor";
    sub["n"] = io::require(req, "n", "export");
    if (req.contains("samples")) sub["samples"] = req["samples"];
    Json inner = cmd_summing(sub);
    out["artifact"] = inner.contains("samples")
                          ? Json{{"descriptor", inner["descriptor"]},
                                 {"samples", inner["samples"]}}
                          : Json{{"descriptor", inner["descriptor"]}};
  } else if (what == "gapped-descriptor") {
    out["artifact"] = io::to_json(gapped::gapped_realization_descriptor(
        io::require(req, "n", "export").get<std::size_t>(),
        io::require(req, "beta", "export").get<double>(),
        io::require(req, "delta", "export").get<double>()));
  } else {
    fail("UsageError", "unknown export kind '" + what + "'");
  }
  return out;
}

} // namespace

Json run_command(const std::string &command, const Json &request) {
  if (command == "validate") return cmd_validate(request);
  if (command == "loss") return cmd_loss(request);
  if (command == "coproduct") return cmd_coproduct(request);
  if (command == "nerve") return cmd_nerve(request);
  if (command == "summing") return cmd_summing(request);
  if (command == "strata") return cmd_strata(request);
  if (command == "gap-locus") return cmd_gap_locus(request);
  if (command == "gap-check") return cmd_gap_check(request);
  if (command == "axiom-suite") return cmd_axiom_suite(request);
  if (command == "export") return cmd_export(request);
  fail("UsageError", "unknown command '" + command + "'");
}

std::string run_command_text(const std::string &command,
                             const std::string &request_json) {
  Json request;
  try {
    request = request_json.empty() ? Json::object()
                                   : Json::parse(request_json);
  } catch (const nlohmann::json::exception &e) {
    fail("ParseError", std::string("request is not valid JSON: ") + e.what());
  }
  return run_command(command, request).dump(2) + "\n";
}

} // namespace gammacat::runner
