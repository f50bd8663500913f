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

#include "gammacat/catops.hpp"

#include <algorithm>

namespace gammacat::catops {

namespace {

template <typename T>
int cmp_vec(const T &a, const T &b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

} // namespace

bool PcMorphismData::operator<(const PcMorphismData &o) const {
  if (source != o.source) return source < o.source;
  if (target != o.target) return target < o.target;
  for (std::size_t j = 0; j < std::min(stoch.size(), o.stoch.size()); ++j)
    if (int c = cmp_vec(stoch[j], o.stoch[j])) return c < 0;
  if (stoch.size() != o.stoch.size()) return stoch.size() < o.stoch.size();
  return families < o.families;
}

std::vector<ZeroSumCategory::Obj> ZeroSumCategory::objects() {
  fail("Unsupported", name() + " does not enumerate objects");
}

std::vector<ZeroSumCategory::Mor> ZeroSumCategory::hom(Obj, Obj) {
  fail("Unsupported", name() + " does not enumerate hom sets");
}

std::string ZeroSumCategory::obj_label(Obj a) const {
  return "obj" + std::to_string(a);
}

//===========================================================================
// PointedSetCategory
//===========================================================================

PointedSetCategory::PointedSetCategory(std::size_t max_size)
    : max_size_(max_size) {}

PointedSetCategory::Obj PointedSetCategory::intern_set(
    const pointed::PointedSet &s) {
  auto it = set_index_.find(s);
  if (it != set_index_.end()) return it->second;
  Obj h = sets_.size();
  sets_.push_back(s);
  set_index_.emplace(s, h);
  return h;
}

PointedSetCategory::Mor PointedSetCategory::intern_map(
    const pointed::PointedMap &m) {
  auto it = map_index_.find(m);
  if (it != map_index_.end()) return it->second;
  intern_set(m.source);
  intern_set(m.target);
  Mor h = maps_.size();
  maps_.push_back(m);
  map_index_.emplace(m, h);
  return h;
}

PointedSetCategory::Obj PointedSetCategory::zero() {
  return intern_set(pointed::PointedSet{1, 0});
}

PointedSetCategory::Obj PointedSetCategory::source(Mor m) const {
  return set_index_.at(maps_.at(m).source);
}

PointedSetCategory::Obj PointedSetCategory::target(Mor m) const {
  return set_index_.at(maps_.at(m).target);
}

PointedSetCategory::Mor PointedSetCategory::identity(Obj a) {
  return intern_map(pointed::identity_map(sets_.at(a)));
}

PointedSetCategory::Mor PointedSetCategory::compose(Mor second, Mor first) {
  return intern_map(pointed::compose(maps_.at(second), maps_.at(first)));
}

PointedSetCategory::Sum PointedSetCategory::sum(Obj a, Obj b) {
  auto w = pointed::wedge(sets_.at(a), sets_.at(b));
  return Sum{intern_set(w.object), intern_map(w.in_left),
             intern_map(w.in_right)};
}

PointedSetCategory::Mor PointedSetCategory::copair(Mor f, Mor g) {
  const auto &mf = maps_.at(f);
  const auto &mg = maps_.at(g);
  auto w = pointed::wedge(mf.source, mg.source);
  return intern_map(pointed::wedge_copair(w, mf, mg));
}

PointedSetCategory::Mor PointedSetCategory::to_zero(Obj a) {
  return intern_map(
      pointed::constant_map(sets_.at(a), pointed::PointedSet{1, 0}));
}

PointedSetCategory::Mor PointedSetCategory::from_zero(Obj a) {
  const auto &t = sets_.at(a);
  return intern_map(
      pointed::PointedMap{pointed::PointedSet{1, 0}, t, {t.base}});
}

bool PointedSetCategory::is_iso(Mor m) {
  return pointed::is_isomorphism(maps_.at(m));
}

std::vector<PointedSetCategory::Obj> PointedSetCategory::objects() {
  std::vector<Obj> out;
  for (std::size_t n = 1; n <= max_size_; ++n)
    out.push_back(intern_set(pointed::PointedSet{n, 0}));
  return out;
}

std::vector<PointedSetCategory::Mor> PointedSetCategory::hom(Obj a, Obj b) {
  std::vector<Mor> out;
  for (const auto &m : pointed::all_pointed_maps(sets_.at(a), sets_.at(b)))
    out.push_back(intern_map(m));
  return out;
}

std::string PointedSetCategory::obj_label(Obj a) const {
  const auto &s = sets_.at(a);
  return "S" + std::to_string(s.size) + "b" + std::to_string(s.base);
}

//===========================================================================
// WreathCategory
//===========================================================================

WreathCategory::WreathCategory(std::shared_ptr<ZeroSumCategory> base)
    : base_(std::move(base)) {
  probe_interface();
}

void WreathCategory::probe_interface() {
  std::vector<ZeroSumCategory::Obj> probes{base_->zero()};
  try {
    auto more = base_->objects();
    for (auto o : more) {
      probes.push_back(o);
      if (probes.size() >= 3) break;
    }
  } catch (const Error &e) {
    if (e.kind() != "Unsupported") throw;
  }
  for (auto a : probes)
    for (auto b : probes) {
      auto s = base_->sum(a, b);
      auto f = base_->to_zero(a);
      auto g = base_->to_zero(b);
      auto cp = base_->copair(f, g);
      if (!base_->obj_eq(base_->source(cp), s.obj))
        fail("InterfaceViolation",
             "copair domain differs from the sum object in " + base_->name());
      if (!base_->mor_eq(base_->compose(cp, s.in_left), f) ||
          !base_->mor_eq(base_->compose(cp, s.in_right), g))
        fail("InterfaceViolation",
             "sum injections fail the copair identities in " + base_->name());
      auto ida = base_->identity(a);
      if (!base_->mor_eq(base_->compose(ida, ida), ida))
        fail("InterfaceViolation", "identity law fails in " + base_->name());
    }
}

PcMorphismData WreathCategory::canonical(PcMorphismData data) const {
  for (auto &row : data.families)
    for (auto &family : row) {
      std::map<ZeroSumCategory::Mor, Rational> merged;
      for (const auto &wm : family) {
        if (wm.weight == 0) continue;
        merged[wm.mor] += wm.weight;
      }
      family.clear();
      for (const auto &[m, w] : merged) family.push_back(PcWeightedMor{m, w});
    }
  return data;
}

WreathCategory::Obj WreathCategory::intern_object(PcObjectData data) {
  if (data.weights.size() != data.terms.size() || data.terms.empty())
    fail("ShapeMismatch", "malformed PC object");
  Rational total = 0;
  for (const auto &w : data.weights) {
    if (w < 0) fail("NegativeEntry", "PC object has a negative weight");
    total += w;
  }
  if (total != 1) fail("WeightSum", "PC object weights must sum to 1");
  auto it = object_index_.find(data);
  if (it != object_index_.end()) return it->second;
  Obj h = objects_.size();
  objects_.push_back(data);
  object_index_.emplace(std::move(data), h);
  return h;
}

WreathCategory::Mor WreathCategory::intern_morphism(PcMorphismData data) {
  data = canonical(std::move(data));
  const auto &src = objects_.at(data.source);
  const auto &tgt = objects_.at(data.target);
  if (data.stoch.size() != tgt.terms.size() ||
      data.families.size() != tgt.terms.size())
    fail("Mismatch", "PC morphism has wrong height");
  for (std::size_t j = 0; j < tgt.terms.size(); ++j) {
    if (data.stoch[j].size() != src.terms.size() ||
        data.families[j].size() != src.terms.size())
      fail("Mismatch", "PC morphism has wrong width");
    for (std::size_t i = 0; i < src.terms.size(); ++i) {
      Rational total = 0;
      for (const auto &wm : data.families[j][i]) {
        if (!base_->obj_eq(base_->source(wm.mor), src.terms[i]) ||
            !base_->obj_eq(base_->target(wm.mor), tgt.terms[j]))
          fail("Mismatch", "family morphism endpoints wrong");
        total += wm.weight;
      }
      if (total != data.stoch[j][i])
        fail("WeightSum", "PC family weights do not sum to the stoch entry");
      if (data.stoch[j][i] > 0 && data.families[j][i].empty())
        fail("EmptyFamily", "positive stoch entry with no morphisms");
    }
  }
  RationalVector image = mat_vec(data.stoch, src.weights);
  if (image != tgt.weights)
    fail("Mismatch", "PC stoch does not transport object weights");
  auto it = morphism_index_.find(data);
  if (it != morphism_index_.end()) return it->second;
  Mor h = morphisms_.size();
  morphisms_.push_back(data);
  morphism_index_.emplace(std::move(data), h);
  return h;
}

WreathCategory::Obj WreathCategory::zero() {
  return intern_object(PcObjectData{{Rational(1)}, {base_->zero()}});
}

bool WreathCategory::obj_eq(Obj a, Obj b) const { return a == b; }

bool WreathCategory::obj_equiv(Obj a, Obj b) const {
  if (a == b) return true;
  auto sorted_terms = [&](Obj h) {
    const auto &d = objects_.at(h);
    std::vector<std::pair<Obj, Rational>> out;
    for (std::size_t i = 0; i < d.terms.size(); ++i)
      out.emplace_back(d.terms[i], d.weights[i]);
    std::sort(out.begin(), out.end(),
              [](const auto &x, const auto &y) {
                if (x.first != y.first) return x.first < y.first;
                return x.second < y.second;
              });
    return out;
  };
  return sorted_terms(a) == sorted_terms(b);
}

WreathCategory::Obj WreathCategory::source(Mor m) const {
  return morphisms_.at(m).source;
}

WreathCategory::Obj WreathCategory::target(Mor m) const {
  return morphisms_.at(m).target;
}

bool WreathCategory::mor_eq(Mor a, Mor b) const { return a == b; }

WreathCategory::Mor WreathCategory::identity(Obj a) {
  const PcObjectData obj = objects_.at(a);
  const std::size_t n = obj.terms.size();
  PcMorphismData d;
  d.source = d.target = a;
  d.stoch.assign(n, RationalVector(n, Rational(0)));
  d.families.assign(n, std::vector<std::vector<PcWeightedMor>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    d.stoch[i][i] = 1;
    d.families[i][i].push_back(
        PcWeightedMor{base_->identity(obj.terms[i]), Rational(1)});
  }
  return intern_morphism(std::move(d));
}

WreathCategory::Mor WreathCategory::compose(Mor second, Mor first) {
  const auto f = morphisms_.at(first);
  const auto g = morphisms_.at(second);
  if (f.target != g.source)
    fail("Mismatch", "PC morphisms are not composable");
  PcMorphismData d;
  d.source = f.source;
  d.target = g.target;
  d.stoch = mat_mul(g.stoch, f.stoch);
  const std::size_t rows = g.stoch.size(), mid = f.stoch.size(),
                    cols = f.stoch.empty() ? 0 : f.stoch[0].size();
  d.families.assign(rows, std::vector<std::vector<PcWeightedMor>>(cols));
  for (std::size_t k = 0; k < rows; ++k)
    for (std::size_t i = 0; i < cols; ++i)
      for (std::size_t j = 0; j < mid; ++j)
        for (const auto &gm : g.families[k][j])
          for (const auto &fm : f.families[j][i])
            d.families[k][i].push_back(PcWeightedMor{
                base_->compose(gm.mor, fm.mor), gm.weight * fm.weight});
  return intern_morphism(std::move(d));
}

WreathCategory::Sum WreathCategory::sum(Obj a, Obj b) {
  const PcObjectData A = objects_.at(a);
  const PcObjectData B = objects_.at(b);
  const std::size_t n = A.terms.size(), m = B.terms.size();
  PcObjectData obj;
  std::vector<ZeroSumCategory::Sum> base_sums;
  base_sums.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto s = base_->sum(A.terms[i], B.terms[j]);
      obj.weights.push_back(A.weights[i] * B.weights[j]);
      obj.terms.push_back(s.obj);
      base_sums.push_back(s);
    }
  Obj sum_obj = intern_object(obj);

  auto pair_index = [m](std::size_t i, std::size_t j) { return i * m + j; };
  PcMorphismData dl, dr;
  dl.source = a;
  dl.target = sum_obj;
  dr.source = b;
  dr.target = sum_obj;
  dl.stoch.assign(n * m, RationalVector(n, Rational(0)));
  dr.stoch.assign(n * m, RationalVector(m, Rational(0)));
  dl.families.assign(n * m, std::vector<std::vector<PcWeightedMor>>(n));
  dr.families.assign(n * m, std::vector<std::vector<PcWeightedMor>>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto &s = base_sums[pair_index(i, j)];
      dl.stoch[pair_index(i, j)][i] = B.weights[j];
      dl.families[pair_index(i, j)][i].push_back(
          PcWeightedMor{s.in_left, B.weights[j]});
      dr.stoch[pair_index(i, j)][j] = A.weights[i];
      dr.families[pair_index(i, j)][j].push_back(
          PcWeightedMor{s.in_right, A.weights[i]});
    }
  return Sum{sum_obj, intern_morphism(std::move(dl)),
             intern_morphism(std::move(dr))};
}

WreathCategory::Mor WreathCategory::copair(Mor f, Mor g) {
  const auto phi = morphisms_.at(f);
  const auto phi2 = morphisms_.at(g);
  if (phi.target != phi2.target)
    fail("TargetMismatch", "PC copair requires a common target");
  const PcObjectData A = objects_.at(phi.source);
  const PcObjectData B = objects_.at(phi2.source);
  const PcObjectData Sig = objects_.at(phi.target);
  Sum s = sum(phi.source, phi2.source);
  const std::size_t n = A.terms.size(), m = B.terms.size();
  auto pair_index = [m](std::size_t i, std::size_t j) { return i * m + j; };

  PcMorphismData d;
  d.source = s.obj;
  d.target = phi.target;
  d.stoch.assign(Sig.terms.size(), RationalVector(n * m, Rational(0)));
  d.families.assign(Sig.terms.size(),
                    std::vector<std::vector<PcWeightedMor>>(n * m));
  for (std::size_t k = 0; k < Sig.terms.size(); ++k) {
    const Rational &sigma_k = Sig.weights[k];
    const bool zero_row = sigma_k == 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Rational entry =
            zero_row ? Rational(phi.stoch[k][i] + phi2.stoch[k][j])
                     : Rational(phi.stoch[k][i] * phi2.stoch[k][j] / sigma_k);
        d.stoch[k][pair_index(i, j)] = entry;
        const auto &ff = phi.families[k][i];
        const auto &gg = phi2.families[k][j];
        if (entry > 0 && (ff.empty() || gg.empty()))
          fail("EmptyFamily", "PC copair has no morphisms for a positive entry");
        for (const auto &fm : ff)
          for (const auto &gm : gg) {
            Rational w =
                zero_row ? Rational(fm.weight / Rational(gg.size()) +
                                    gm.weight / Rational(ff.size()))
                         : Rational(fm.weight * gm.weight / sigma_k);
            d.families[k][pair_index(i, j)].push_back(
                PcWeightedMor{base_->copair(fm.mor, gm.mor), w});
          }
      }
  }
  return intern_morphism(std::move(d));
}

WreathCategory::Mor WreathCategory::to_zero(Obj a) {
  const PcObjectData A = objects_.at(a);
  Obj z = zero();
  PcMorphismData d;
  d.source = a;
  d.target = z;
  d.stoch.assign(1, RationalVector(A.terms.size(), Rational(1)));
  d.families.assign(1, std::vector<std::vector<PcWeightedMor>>(A.terms.size()));
  for (std::size_t i = 0; i < A.terms.size(); ++i)
    d.families[0][i].push_back(
        PcWeightedMor{base_->to_zero(A.terms[i]), Rational(1)});
  return intern_morphism(std::move(d));
}

WreathCategory::Mor WreathCategory::from_zero(Obj a) {
  const PcObjectData A = objects_.at(a);
  Obj z = zero();
  PcMorphismData d;
  d.source = z;
  d.target = a;
  d.stoch.assign(A.terms.size(), RationalVector(1));
  d.families.assign(A.terms.size(), std::vector<std::vector<PcWeightedMor>>(1));
  for (std::size_t i = 0; i < A.terms.size(); ++i) {
    d.stoch[i][0] = A.weights[i];
    if (A.weights[i] > 0)
      d.families[i][0].push_back(
          PcWeightedMor{base_->from_zero(A.terms[i]), A.weights[i]});
  }
  return intern_morphism(std::move(d));
}

bool WreathCategory::is_iso(Mor m) {
  const auto &d = morphisms_.at(m);
  const auto &src = objects_.at(d.source);
  const auto &tgt = objects_.at(d.target);
  if (src.terms.size() != tgt.terms.size()) return false;
  // invertible stochastic matrices are permutations
  for (const auto &row : d.stoch) {
    Rational s = 0;
    for (const auto &e : row) {
      if (e != 0 && e != 1) return false;
      s += e;
    }
    if (s != 1) return false;
  }
  for (std::size_t i = 0; i < src.terms.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < tgt.terms.size(); ++j) s += d.stoch[j][i];
    if (s != 1) return false;
  }
  for (std::size_t j = 0; j < tgt.terms.size(); ++j)
    for (std::size_t i = 0; i < src.terms.size(); ++i)
      if (d.stoch[j][i] == 1) {
        if (d.families[j][i].size() != 1 ||
            !base_->is_iso(d.families[j][i][0].mor))
          return false;
      }
  return true;
}

std::string WreathCategory::obj_label(Obj a) const {
  const auto &o = objects_.at(a);
  std::string s = "[";
  for (std::size_t i = 0; i < o.terms.size(); ++i) {
    if (i) s += " + ";
    s += rat_str(o.weights[i]) + "*" + base_->obj_label(o.terms[i]);
  }
  return s + "]";
}

std::unique_ptr<WreathCategory> wreath_pc(
    std::shared_ptr<ZeroSumCategory> base) {
  return std::make_unique<WreathCategory>(std::move(base));
}

//===========================================================================
// Bridges between wreath-over-pointed-sets and the concrete PS* values
//===========================================================================

WreathCategory::Obj pc_from_prob(WreathCategory &pc, PointedSetCategory &base,
                                 const probcat::ProbPointedSet &x) {
  PcObjectData d;
  for (const auto &t : x.terms) {
    d.weights.push_back(t.weight);
    d.terms.push_back(base.intern_set(t.set));
  }
  return pc.intern_object(std::move(d));
}

probcat::ProbPointedSet prob_from_pc(const WreathCategory &pc,
                                     const PointedSetCategory &base,
                                     WreathCategory::Obj a) {
  const auto &d = pc.object_of(a);
  probcat::ProbPointedSet out;
  for (std::size_t i = 0; i < d.terms.size(); ++i)
    out.terms.push_back(
        probcat::ProbTerm{d.weights[i], base.set_of(d.terms[i])});
  return out;
}

WreathCategory::Mor pc_from_prob_morphism(WreathCategory &pc,
                                          PointedSetCategory &base,
                                          const probcat::ProbMorphism &phi) {
  PcMorphismData d;
  d.source = pc_from_prob(pc, base, phi.source);
  d.target = pc_from_prob(pc, base, phi.target);
  d.stoch = phi.stoch;
  d.families.resize(phi.families.size());
  for (std::size_t j = 0; j < phi.families.size(); ++j) {
    d.families[j].resize(phi.families[j].size());
    for (std::size_t i = 0; i < phi.families[j].size(); ++i)
      for (const auto &wm : phi.families[j][i])
        d.families[j][i].push_back(
            PcWeightedMor{base.intern_map(wm.map), wm.weight});
  }
  return pc.intern_morphism(std::move(d));
}

probcat::ProbMorphism prob_from_pc_morphism(const WreathCategory &pc,
                                            const PointedSetCategory &base,
                                            WreathCategory::Mor m) {
  const auto &d = pc.morphism_of(m);
  probcat::ProbMorphism out;
  out.source = prob_from_pc(pc, base, d.source);
  out.target = prob_from_pc(pc, base, d.target);
  out.stoch = d.stoch;
  out.families.resize(d.families.size());
  for (std::size_t j = 0; j < d.families.size(); ++j) {
    out.families[j].resize(d.families[j].size());
    for (std::size_t i = 0; i < d.families[j].size(); ++i)
      for (const auto &wm : d.families[j][i])
        out.families[j][i].push_back(
            probcat::WeightedMap{base.map_of(wm.mor), wm.weight});
  }
  return out;
}

} // namespace gammacat::catops
