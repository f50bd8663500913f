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

#include "gammacat/json_io.hpp"

#include <cstdio>

namespace gammacat::io {

Json jreal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return Json(std::strtod(buf, nullptr));
}

void expect_keys(const Json &j, std::initializer_list<const char *> allowed,
                 const std::string &where) {
  if (!j.is_object()) fail("ParseError", where + ": expected an object");
  for (const auto &[key, value] : j.items()) {
    bool ok = false;
    for (const char *a : allowed)
      if (key == a) ok = true;
    if (!ok) fail("ParseError", where + ": unknown field '" + key + "'");
  }
}

const Json &require(const Json &j, const std::string &key,
                    const std::string &where) {
  auto it = j.find(key);
  if (it == j.end())
    fail("ParseError", where + ": missing field '" + key + "'");
  return *it;
}

Json jrat(const Rational &q) { return Json(rat_str(q)); }

Rational rational_from_json(const Json &j, const std::string &where) {
  if (!j.is_string())
    fail("ParseError",
         where + ": rationals must be \"p/q\" strings, floats are rejected");
  return rat_parse(j.get<std::string>());
}

Json jrat(const RationalVector &v) {
  Json out = Json::array();
  for (const auto &q : v) out.push_back(jrat(q));
  return out;
}

RationalVector rational_vector_from_json(const Json &j,
                                         const std::string &where) {
  if (!j.is_array()) fail("ParseError", where + ": expected an array");
  RationalVector out;
  for (const auto &e : j) out.push_back(rational_from_json(e, where));
  return out;
}

Json jrat(const RationalMatrix &m) {
  Json out = Json::array();
  for (const auto &row : m) out.push_back(jrat(row));
  return out;
}

RationalMatrix rational_matrix_from_json(const Json &j,
                                         const std::string &where) {
  if (!j.is_array()) fail("ParseError", where + ": expected a matrix");
  RationalMatrix out;
  for (const auto &row : j)
    out.push_back(rational_vector_from_json(row, where));
  return out;
}

Json to_json(const finprob::FiniteProbability &p) {
  Json out;
  out["labels"] = p.labels;
  out["probs"] = jrat(p.probs);
  return out;
}

finprob::FiniteProbability probability_from_json(const Json &j) {
  expect_keys(j, {"labels", "probs"}, "probability");
  std::vector<std::string> labels;
  for (const auto &l : require(j, "labels", "probability")) {
    if (!l.is_string()) fail("ParseError", "probability: labels are strings");
    labels.push_back(l.get<std::string>());
  }
  return finprob::make_probability(
      labels, rational_vector_from_json(require(j, "probs", "probability"),
                                        "probability.probs"));
}

Json to_json(const finprob::StochasticMorphism &s) {
  Json out;
  out["source"] = to_json(s.source);
  out["target"] = to_json(s.target);
  out["matrix"] = jrat(s.matrix);
  return out;
}

finprob::StochasticMorphism morphism_from_json(const Json &j) {
  expect_keys(j, {"source", "target", "matrix"}, "morphism");
  auto src = probability_from_json(require(j, "source", "morphism"));
  auto tgt = probability_from_json(require(j, "target", "morphism"));
  auto m = rational_matrix_from_json(require(j, "matrix", "morphism"),
                                     "morphism.matrix");
  return finprob::validate(m, src, tgt);
}

Json to_json(const pointed::PointedSet &s) {
  Json out;
  out["size"] = s.size;
  out["base"] = s.base;
  return out;
}

pointed::PointedSet pointed_set_from_json(const Json &j) {
  expect_keys(j, {"size", "base"}, "pointed set");
  return pointed::make_pointed_set(
      require(j, "size", "pointed set").get<std::size_t>(),
      require(j, "base", "pointed set").get<std::size_t>());
}

Json to_json(const probcat::ProbPointedSet &x) {
  Json terms = Json::array();
  for (const auto &t : x.terms) {
    Json term;
    term["w"] = jrat(t.weight);
    term["set"] = to_json(t.set);
    terms.push_back(term);
  }
  Json out;
  out["terms"] = terms;
  return out;
}

probcat::ProbPointedSet prob_pointed_set_from_json(const Json &j) {
  expect_keys(j, {"terms"}, "prob pointed set");
  std::vector<probcat::ProbTerm> terms;
  for (const auto &t : require(j, "terms", "prob pointed set")) {
    expect_keys(t, {"w", "set"}, "prob pointed set term");
    terms.push_back(probcat::ProbTerm{
        rational_from_json(require(t, "w", "term"), "term.w"),
        pointed_set_from_json(require(t, "set", "term"))});
  }
  return probcat::make_prob_pointed_set(std::move(terms));
}

Json to_json(const probcat::ProbMorphism &phi) {
  Json out;
  out["source"] = to_json(phi.source);
  out["target"] = to_json(phi.target);
  out["stoch"] = jrat(phi.stoch);
  Json fams = Json::object();
  for (std::size_t jdx = 0; jdx < phi.families.size(); ++jdx)
    for (std::size_t idx = 0; idx < phi.families[jdx].size(); ++idx) {
      if (phi.families[jdx][idx].empty()) continue;
      Json list = Json::array();
      for (const auto &wm : phi.families[jdx][idx]) {
        Json e;
        e["map"] = wm.map.table;
        e["w"] = jrat(wm.weight);
        list.push_back(e);
      }
      fams[std::to_string(jdx) + "," + std::to_string(idx)] = list;
    }
  out["families"] = fams;
  return out;
}

probcat::ProbMorphism prob_morphism_from_json(const Json &j) {
  expect_keys(j, {"source", "target", "stoch", "families"}, "prob morphism");
  auto src = prob_pointed_set_from_json(require(j, "source", "prob morphism"));
  auto tgt = prob_pointed_set_from_json(require(j, "target", "prob morphism"));
  auto stoch = rational_matrix_from_json(
      require(j, "stoch", "prob morphism"), "prob morphism.stoch");
  std::vector<std::vector<std::vector<probcat::WeightedMap>>> fams(
      tgt.term_count(),
      std::vector<std::vector<probcat::WeightedMap>>(src.term_count()));
  for (const auto &[key, list] : require(j, "families", "prob morphism").items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos)
      fail("ParseError", "families keys look like \"j,i\"");
    std::size_t jdx = std::stoul(key.substr(0, comma));
    std::size_t idx = std::stoul(key.substr(comma + 1));
    if (jdx >= tgt.term_count() || idx >= src.term_count())
      fail("ParseError", "family key '" + key + "' out of range");
    for (const auto &e : list) {
      expect_keys(e, {"map", "w"}, "family entry");
      std::vector<std::size_t> table;
      for (const auto &v : require(e, "map", "family entry"))
        table.push_back(v.get<std::size_t>());
      fams[jdx][idx].push_back(probcat::WeightedMap{
          pointed::make_pointed_map(src.terms[idx].set, tgt.terms[jdx].set,
                                    std::move(table)),
          rational_from_json(require(e, "w", "family entry"), "family.w")});
    }
  }
  return probcat::make_prob_morphism(std::move(src), std::move(tgt),
                                     std::move(stoch), std::move(fams));
}

Json to_json(const quantum::Complex &c) {
  Json out;
  out["re"] = jreal(c.real());
  out["im"] = jreal(c.imag());
  return out;
}

quantum::Complex complex_from_json(const Json &j, const std::string &where) {
  if (j.is_number()) return quantum::Complex(j.get<double>(), 0.0);
  expect_keys(j, {"re", "im"}, where);
  return quantum::Complex(require(j, "re", where).get<double>(),
                          require(j, "im", where).get<double>());
}

Json to_json(const quantum::CMatrix &m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

quantum::CMatrix cmatrix_from_json(const Json &j, const std::string &where) {
  if (!j.is_array() || j.empty())
    fail("ParseError", where + ": expected a nonempty matrix");
  const Eigen::Index rows = Eigen::Index(j.size());
  const Eigen::Index cols = Eigen::Index(j[0].size());
  quantum::CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (Eigen::Index(j[r].size()) != cols)
      fail("ParseError", where + ": ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(j[r][c], where);
  }
  return m;
}

Json to_json(const quantum::DensityMatrix &d) {
  Json out;
  out["dim"] = d.dim();
  out["entries"] = to_json(d.rho);
  return out;
}

quantum::DensityMatrix density_from_json(const Json &j) {
  expect_keys(j, {"dim", "entries"}, "density");
  auto m = cmatrix_from_json(require(j, "entries", "density"),
                             "density.entries");
  if (Eigen::Index(require(j, "dim", "density").get<std::size_t>()) != m.rows())
    fail("ParseError", "density: dim does not match entries");
  return quantum::validate_density(m);
}

Json to_json(const quantum::QuantumChannel &c) {
  Json out;
  out["dims"] = Json::array({c.dim_in, c.dim_out});
  out["choi"] = to_json(c.choi);
  return out;
}

quantum::QuantumChannel channel_from_json(const Json &j) {
  expect_keys(j, {"dims", "choi", "kraus"}, "channel");
  const auto &dims = require(j, "dims", "channel");
  if (!dims.is_array() || dims.size() != 2)
    fail("ParseError", "channel: dims is [in, out]");
  Eigen::Index din = dims[0].get<std::size_t>();
  Eigen::Index dout = dims[1].get<std::size_t>();
  if (j.contains("kraus")) {
    std::vector<quantum::CMatrix> kraus;
    for (const auto &k : j["kraus"])
      kraus.push_back(cmatrix_from_json(k, "channel.kraus"));
    auto c = quantum::channel_from_kraus(kraus);
    if (c.dim_in != din || c.dim_out != dout)
      fail("DimensionMismatch", "channel: dims do not match the Kraus shapes");
    return c;
  }
  return quantum::channel_from_choi(
      din, dout, cmatrix_from_json(require(j, "choi", "channel"),
                                   "channel.choi"));
}

Json to_json(const category::FiniteCategorySpec &c) {
  Json out;
  out["objects"] = c.objects;
  Json mors = Json::array();
  for (const auto &m : c.morphisms) {
    Json e;
    e["name"] = m.name;
    e["src"] = c.objects[m.src];
    e["dst"] = c.objects[m.dst];
    mors.push_back(e);
  }
  out["morphisms"] = mors;
  Json ids = Json::object();
  for (std::size_t o = 0; o < c.objects.size(); ++o)
    ids[c.objects[o]] = c.morphisms[c.identities[o]].name;
  out["identities"] = ids;
  Json comp = Json::object();
  for (const auto &[pair, h] : c.composition)
    comp[c.morphisms[pair.first].name + "|" + c.morphisms[pair.second].name] =
        c.morphisms[h].name;
  out["composition"] = comp;
  out["basepoint"] = c.objects[c.basepoint_object];
  return out;
}

category::FiniteCategorySpec category_from_json(const Json &j) {
  expect_keys(j, {"objects", "morphisms", "identities", "composition",
                  "basepoint"},
              "category");
  category::FiniteCategorySpec c;
  std::map<std::string, std::size_t> obj_index, mor_index;
  for (const auto &o : require(j, "objects", "category")) {
    obj_index[o.get<std::string>()] = c.objects.size();
    c.objects.push_back(o.get<std::string>());
  }
  for (const auto &m : require(j, "morphisms", "category")) {
    expect_keys(m, {"name", "src", "dst"}, "category morphism");
    const std::string name = require(m, "name", "morphism").get<std::string>();
    auto src = obj_index.find(require(m, "src", "morphism").get<std::string>());
    auto dst = obj_index.find(require(m, "dst", "morphism").get<std::string>());
    if (src == obj_index.end() || dst == obj_index.end())
      fail("ParseError", "category: morphism '" + name + "' endpoints unknown");
    mor_index[name] = c.morphisms.size();
    c.morphisms.push_back(
        category::MorphismSpec{name, src->second, dst->second});
  }
  c.identities.assign(c.objects.size(), 0);
  for (const auto &[obj, mor] :
       require(j, "identities", "category").items()) {
    auto o = obj_index.find(obj);
    auto m = mor_index.find(mor.get<std::string>());
    if (o == obj_index.end() || m == mor_index.end())
      fail("ParseError", "category: bad identity entry for '" + obj + "'");
    c.identities[o->second] = m->second;
  }
  for (const auto &[key, val] :
       require(j, "composition", "category").items()) {
    auto bar = key.find('|');
    if (bar == std::string::npos)
      fail("ParseError", "category: composition keys look like \"g|f\"");
    auto g = mor_index.find(key.substr(0, bar));
    auto f = mor_index.find(key.substr(bar + 1));
    auto h = mor_index.find(val.get<std::string>());
    if (g == mor_index.end() || f == mor_index.end() || h == mor_index.end())
      fail("ParseError", "category: unknown morphism in composition");
    c.composition[{g->second, f->second}] = h->second;
  }
  if (j.contains("basepoint")) {
    auto o = obj_index.find(j["basepoint"].get<std::string>());
    if (o == obj_index.end()) fail("ParseError", "category: bad basepoint");
    c.basepoint_object = o->second;
  }
  c.validate();
  return c;
}

Json to_json(const cubical::TruncatedCubicalSet &k) {
  Json out;
  out["top_dim"] = k.top_dim;
  auto counts = cubical::nondegenerate_counts(k);
  Json levels = Json::array();
  for (int n = 0; n <= k.top_dim; ++n) {
    Json level;
    level["cells"] = k.level_sizes[n];
    level["base"] = k.basepoint[n];
    // degeneracy flags per cell
    std::vector<bool> degenerate(k.level_sizes[n], false);
    if (n >= 1) {
      for (const auto &t : k.degen[n - 1])
        for (auto v : t) degenerate[v] = true;
      if (n - 1 >= 1)
        for (const auto &t : k.conn[n - 1])
          for (auto v : t) degenerate[v] = true;
    }
    level["degenerate"] = degenerate;
    levels.push_back(level);
  }
  out["levels"] = levels;
  Json faces = Json::array();
  for (int n = 1; n <= k.top_dim; ++n)
    for (int a = 0; a < 2; ++a)
      for (int i = 1; i <= n; ++i) {
        Json e;
        e["level"] = n;
        e["a"] = a;
        e["i"] = i;
        e["table"] = k.faces[n][a][i - 1];
        faces.push_back(e);
      }
  out["faces"] = faces;
  Json degs = Json::array();
  for (int n = 0; n < k.top_dim; ++n)
    for (int i = 1; i <= n + 1; ++i) {
      Json e;
      e["level"] = n;
      e["i"] = i;
      e["table"] = k.degen[n][i - 1];
      degs.push_back(e);
    }
  out["degeneracies"] = degs;
  Json conns = Json::array();
  for (int n = 1; n < k.top_dim; ++n)
    for (int i = 1; i <= n; ++i) {
      Json e;
      e["level"] = n;
      e["i"] = i;
      e["table"] = k.conn[n][i - 1];
      conns.push_back(e);
    }
  out["connections"] = conns;
  out["complete"] = k.dimensionally_complete;
  return out;
}

cubical::TruncatedCubicalSet cubical_from_json(const Json &j) {
  expect_keys(j, {"top_dim", "levels", "faces", "degeneracies", "connections",
                  "complete"},
              "cubical set");
  cubical::TruncatedCubicalSet k;
  k.top_dim = require(j, "top_dim", "cubical set").get<int>();
  const auto &levels = require(j, "levels", "cubical set");
  for (const auto &level : levels) {
    expect_keys(level, {"cells", "base", "degenerate"}, "cubical level");
    k.level_sizes.push_back(require(level, "cells", "level").get<std::size_t>());
    k.basepoint.push_back(require(level, "base", "level").get<std::size_t>());
  }
  k.faces.resize(k.top_dim + 1);
  for (int n = 1; n <= k.top_dim; ++n)
    for (int a = 0; a < 2; ++a) k.faces[n][a].resize(n);
  k.degen.resize(std::max(k.top_dim, 1));
  for (int n = 0; n < k.top_dim; ++n) k.degen[n].resize(n + 1);
  k.conn.resize(std::max(k.top_dim, 1));
  for (int n = 1; n < k.top_dim; ++n) k.conn[n].resize(n);
  auto read_table = [](const Json &e) {
    std::vector<std::size_t> t;
    for (const auto &v : e) t.push_back(v.get<std::size_t>());
    return t;
  };
  for (const auto &e : require(j, "faces", "cubical set")) {
    expect_keys(e, {"level", "a", "i", "table"}, "face table");
    k.faces.at(e["level"].get<int>())[e["a"].get<int>()]
        .at(e["i"].get<int>() - 1) = read_table(e["table"]);
  }
  for (const auto &e : require(j, "degeneracies", "cubical set")) {
    expect_keys(e, {"level", "i", "table"}, "degeneracy table");
    k.degen.at(e["level"].get<int>()).at(e["i"].get<int>() - 1) =
        read_table(e["table"]);
  }
  for (const auto &e : require(j, "connections", "cubical set")) {
    expect_keys(e, {"level", "i", "table"}, "connection table");
    k.conn.at(e["level"].get<int>()).at(e["i"].get<int>() - 1) =
        read_table(e["table"]);
  }
  if (j.contains("complete")) k.dimensionally_complete = j["complete"].get<bool>();
  cubical::validate_cubical(k);
  return k;
}

Json to_json(const summing::RealizationDescriptor &d) {
  Json out;
  switch (d.kind) {
    case summing::RealizationDescriptor::Kind::ClassicalCube:
      out["kind"] = "classical-cube";
      break;
    case summing::RealizationDescriptor::Kind::QuantumAnnulus:
      out["kind"] = "quantum-annulus";
      break;
    case summing::RealizationDescriptor::Kind::GappedTorus:
      out["kind"] = "gapped-torus";
      break;
  }
  out["N"] = d.n;
  out["ambient"] = d.ambient;
  if (d.kind == summing::RealizationDescriptor::Kind::GappedTorus) {
    out["beta"] = jreal(d.beta);
    out["delta"] = jreal(d.delta);
    out["interval"] = Json::array({jreal(d.interval_lo), jreal(d.interval_hi)});
  }
  Json strata = Json::array();
  for (const auto &s : d.strata) {
    Json e;
    e["j"] = s.j;
    e["stabilizer"] = s.stabilizer;
    e["base_set"] = s.base_set;
    strata.push_back(e);
  }
  out["strata"] = strata;
  return out;
}

Json to_json(const gapped::GapLocus &l) {
  Json out;
  out["beta"] = jreal(l.beta);
  out["delta"] = jreal(l.delta);
  out["t"] = jreal(l.t);
  out["c"] = jreal(l.c);
  out["feasible"] = l.feasible;
  if (l.feasible) {
    out["interval"] = Json::array({jreal(l.alpha_lo), jreal(l.alpha_hi)});
    out["radius_sq_at_half"] = jreal(l.radius_sq(0.5));
  } else {
    out["interval"] = Json::array();
  }
  out["threshold_beta_delta"] = jreal(gapped::gap_threshold_beta_delta());
  return out;
}

} // namespace gammacat::io
