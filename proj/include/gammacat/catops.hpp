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

#ifndef GAMMACAT_CATOPS_HPP
#define GAMMACAT_CATOPS_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gammacat/pointed.hpp"
#include "gammacat/probcat.hpp"
#include "gammacat/rational.hpp"

namespace gammacat::catops {

// Operational interface of a category with zero object and binary sum.
// Objects and morphisms are opaque handles interned by the implementation;
// sum() and compose() may create new ones. Enumeration of a finite fragment
// (objects(), hom()) is optional and throws Unsupported when unavailable.
class ZeroSumCategory {
public:
  using Obj = std::size_t;
  using Mor = std::size_t;

  struct Sum {
    Obj obj;
    Mor in_left;
    Mor in_right;
  };

  virtual ~ZeroSumCategory() = default;

  virtual std::string name() const = 0;

  virtual Obj zero() = 0;
  virtual bool obj_eq(Obj a, Obj b) const = 0;
  // equality up to the canonical reindexing of the implementation (e.g.
  // sorting the terms of a convex combination); defaults to obj_eq
  virtual bool obj_equiv(Obj a, Obj b) const { return obj_eq(a, b); }
  virtual Obj source(Mor m) const = 0;
  virtual Obj target(Mor m) const = 0;
  virtual bool mor_eq(Mor a, Mor b) const = 0;

  virtual Mor identity(Obj a) = 0;
  virtual Mor compose(Mor second, Mor first) = 0;
  virtual Sum sum(Obj a, Obj b) = 0;
  // [f,g] : A + B -> C for f : A -> C, g : B -> C.
  virtual Mor copair(Mor f, Mor g) = 0;
  virtual Mor to_zero(Obj a) = 0;
  virtual Mor from_zero(Obj a) = 0;

  virtual bool is_iso(Mor m) = 0;

  virtual std::vector<Obj> objects();
  virtual std::vector<Mor> hom(Obj a, Obj b);

  virtual std::string obj_label(Obj a) const;
};

// Finite pointed sets (bounded fragment for enumeration), wedge sum.
class PointedSetCategory : public ZeroSumCategory {
public:
  explicit PointedSetCategory(std::size_t max_size = 6);

  std::string name() const override { return "pointed-sets"; }
  Obj zero() override;
  bool obj_eq(Obj a, Obj b) const override { return a == b; }
  Obj source(Mor m) const override;
  Obj target(Mor m) const override;
  bool mor_eq(Mor a, Mor b) const override { return a == b; }
  Mor identity(Obj a) override;
  Mor compose(Mor second, Mor first) override;
  Sum sum(Obj a, Obj b) override;
  Mor copair(Mor f, Mor g) override;
  Mor to_zero(Obj a) override;
  Mor from_zero(Obj a) override;
  bool is_iso(Mor m) override;
  std::vector<Obj> objects() override;
  std::vector<Mor> hom(Obj a, Obj b) override;
  std::string obj_label(Obj a) const override;

  Obj intern_set(const pointed::PointedSet &s);
  Mor intern_map(const pointed::PointedMap &m);
  const pointed::PointedSet &set_of(Obj a) const { return sets_.at(a); }
  const pointed::PointedMap &map_of(Mor m) const { return maps_.at(m); }

private:
  std::size_t max_size_;
  std::vector<pointed::PointedSet> sets_;
  std::vector<pointed::PointedMap> maps_;
  std::map<pointed::PointedSet, Obj> set_index_;
  std::map<pointed::PointedMap, Mor> map_index_;
};

// The one-object one-morphism category; its wreath is equivalent to FP.
class TrivialCategory final : public ZeroSumCategory {
public:
  std::string name() const override { return "trivial"; }
  Obj zero() override { return 0; }
  bool obj_eq(Obj a, Obj b) const override { return a == b; }
  Obj source(Mor) const override { return 0; }
  Obj target(Mor) const override { return 0; }
  bool mor_eq(Mor a, Mor b) const override { return a == b; }
  Mor identity(Obj) override { return 0; }
  Mor compose(Mor, Mor) override { return 0; }
  Sum sum(Obj, Obj) override { return Sum{0, 0, 0}; }
  Mor copair(Mor, Mor) override { return 0; }
  Mor to_zero(Obj) override { return 0; }
  Mor from_zero(Obj) override { return 0; }
  bool is_iso(Mor) override { return true; }
  std::vector<Obj> objects() override { return {0}; }
  std::vector<Mor> hom(Obj, Obj) override { return {0}; }
};

// The wreath construction PC = FP wr C over any zero-sum category: objects
// are formal convex combinations of base objects, morphisms are stochastic
// matrices together with weighted families of base morphisms.
struct PcObjectData {
  RationalVector weights;
  std::vector<ZeroSumCategory::Obj> terms;

  bool operator==(const PcObjectData &o) const {
    return weights == o.weights && terms == o.terms;
  }
  bool operator<(const PcObjectData &o) const {
    if (terms != o.terms) return terms < o.terms;
    return std::lexicographical_compare(weights.begin(), weights.end(),
                                        o.weights.begin(), o.weights.end());
  }
};

struct PcWeightedMor {
  ZeroSumCategory::Mor mor;
  Rational weight;

  bool operator==(const PcWeightedMor &o) const {
    return mor == o.mor && weight == o.weight;
  }
  bool operator<(const PcWeightedMor &o) const {
    if (mor != o.mor) return mor < o.mor;
    return weight < o.weight;
  }
};

struct PcMorphismData {
  std::size_t source = 0;
  std::size_t target = 0;
  RationalMatrix stoch;
  std::vector<std::vector<std::vector<PcWeightedMor>>> families; // [j][i]

  bool operator==(const PcMorphismData &o) const {
    return source == o.source && target == o.target && stoch == o.stoch &&
           families == o.families;
  }
  bool operator<(const PcMorphismData &o) const;
};

class WreathCategory final : public ZeroSumCategory {
public:
  // Probes the base interface (zero / sum / copair identities on a few
  // objects) and throws InterfaceViolation if a probe fails.
  explicit WreathCategory(std::shared_ptr<ZeroSumCategory> base);

  std::string name() const override { return "P(" + base_->name() + ")"; }
  Obj zero() override;
  bool obj_eq(Obj a, Obj b) const override;
  bool obj_equiv(Obj a, Obj b) const override;
  Obj source(Mor m) const override;
  Obj target(Mor m) const override;
  bool mor_eq(Mor a, Mor b) const override;
  Mor identity(Obj a) override;
  Mor compose(Mor second, Mor first) override;
  Sum sum(Obj a, Obj b) override;
  Mor copair(Mor f, Mor g) override;
  Mor to_zero(Obj a) override;
  Mor from_zero(Obj a) override;
  bool is_iso(Mor m) override;
  std::string obj_label(Obj a) const override;

  ZeroSumCategory &base() { return *base_; }

  Obj intern_object(PcObjectData data);
  Mor intern_morphism(PcMorphismData data); // canonicalizes, checks invariants
  const PcObjectData &object_of(Obj a) const { return objects_.at(a); }
  const PcMorphismData &morphism_of(Mor m) const { return morphisms_.at(m); }

private:
  void probe_interface();
  PcMorphismData canonical(PcMorphismData data) const;

  std::shared_ptr<ZeroSumCategory> base_;
  std::vector<PcObjectData> objects_;
  std::vector<PcMorphismData> morphisms_;
  std::map<PcObjectData, Obj> object_index_;
  std::map<PcMorphismData, Mor> morphism_index_;
};

std::unique_ptr<WreathCategory> wreath_pc(std::shared_ptr<ZeroSumCategory> base);

// Bridges between the wreath over pointed sets and the concrete PS* values;
// used to cross-check the generic construction against the direct one.
WreathCategory::Obj pc_from_prob(WreathCategory &pc, PointedSetCategory &base,
                                 const probcat::ProbPointedSet &x);
probcat::ProbPointedSet prob_from_pc(const WreathCategory &pc,
                                     const PointedSetCategory &base,
                                     WreathCategory::Obj a);
WreathCategory::Mor pc_from_prob_morphism(WreathCategory &pc,
                                          PointedSetCategory &base,
                                          const probcat::ProbMorphism &phi);
probcat::ProbMorphism prob_from_pc_morphism(const WreathCategory &pc,
                                            const PointedSetCategory &base,
                                            WreathCategory::Mor m);

} // namespace gammacat::catops

#endif
