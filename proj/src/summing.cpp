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

#include "gammacat/summing.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace gammacat::summing {

using catops::ZeroSumCategory;

ClassicalSummingFunctor make_classical(RationalVector lambda) {
  for (const auto &l : lambda)
    if (!is_zero_one_range(l))
      fail("NegativeEntry", "lambda entry " + rat_str(l) + " outside [0,1]");
  if (lambda.size() > 20) fail("ExplosionGuard", "too many points");
  return ClassicalSummingFunctor{std::move(lambda)};
}

Rational pattern_weight(const ClassicalSummingFunctor &f, std::uint32_t mask) {
  Rational w = 1;
  for (std::size_t i = 0; i < f.points(); ++i)
    if (mask & (std::uint32_t(1) << i)) w *= f.lambda[i];
  return w;
}

probcat::ProbPointedSet classical_evaluate(const ClassicalSummingFunctor &f,
                                           std::uint32_t mask) {
  std::vector<std::size_t> pts;
  for (std::size_t i = 0; i < f.points(); ++i)
    if (mask & (std::uint32_t(1) << i)) pts.push_back(i);
  const std::size_t n = pts.size();
  if (n == 0) return probcat::zero_ps();
  probcat::ProbPointedSet out;
  pointed::PointedSet shape{n + 1, 0};
  for (std::uint32_t pattern = 0; pattern < (std::uint32_t(1) << n);
       ++pattern) {
    Rational w = 1;
    for (std::size_t r = 0; r < n; ++r) {
      const Rational &l = f.lambda[pts[r]];
      w *= (pattern & (std::uint32_t(1) << r)) ? Rational(1 - l) : l;
    }
    out.terms.push_back(probcat::ProbTerm{w, shape});
  }
  return out;
}

SummingTable classical_table(const ClassicalSummingFunctor &f) {
  SummingTable t;
  t.n_points = f.points();
  const std::uint32_t count = std::uint32_t(1) << f.points();
  t.value.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask)
    t.value.push_back(classical_evaluate(f, mask));
  return t;
}

SummingReport verify_summing(const SummingTable &table) {
  SummingReport report;
  const std::uint32_t count = std::uint32_t(1) << table.n_points;
  if (!(table.value.at(0) == probcat::zero_ps())) {
    report.pass = false;
    report.violations.push_back(
        SummingViolation{0, 0, "value at the basepoint is not the zero object"});
  }
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = 0; b < count; ++b) {
      if (a & b) continue;
      auto cp = probcat::coproduct_ps(table.value[a], table.value[b]);
      if (!probcat::iso_reindexed_equal(table.value[a | b], cp.object)) {
        report.pass = false;
        report.violations.push_back(SummingViolation{
            a, b, "value on the union differs from the coproduct"});
      }
    }
  return report;
}

SummingTable push_forward(const SummingTable &table,
                          const pointed::PointedMap &f) {
  if (f.source.base != 0 || f.target.base != 0 ||
      f.source.size != table.n_points + 1)
    fail("ShapeMismatch", "push_forward expects base-0 sets matching the table");
  SummingTable out;
  out.n_points = f.target.size - 1;
  const std::uint32_t count = std::uint32_t(1) << out.n_points;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    std::uint32_t pre = 0;
    for (std::size_t x = 1; x < f.source.size; ++x) {
      std::size_t y = f.table[x];
      if (y != 0 && (mask & (std::uint32_t(1) << (y - 1))))
        pre |= std::uint32_t(1) << (x - 1);
    }
    out.value.push_back(table.value.at(pre));
  }
  return out;
}

//===========================================================================
// Descriptors
//===========================================================================

std::vector<RationalVector> cube_vertices(const RationalVector &z) {
  const std::size_t n = z.size();
  std::vector<RationalVector> out;
  out.reserve(std::size_t(1) << n);
  for (std::uint32_t pattern = 0; pattern < (std::uint32_t(1) << n);
       ++pattern) {
    RationalVector v(n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = (pattern & (std::uint32_t(1) << i)) ? Rational(1 - z[i]) : z[i];
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

std::string stabilizer_label(std::size_t j, std::size_t n) {
  std::string s;
  if (j > 0) {
    s += "U(2)";
    if (j > 1) s += "^" + std::to_string(j);
  }
  if (j < n) {
    if (!s.empty()) s += " (x) ";
    s += "(U(1)xU(1))";
    if (n - j > 1) s += "^" + std::to_string(n - j);
  }
  if (s.empty()) s = "1";
  return s;
}

std::vector<Stratum> unitary_strata(std::size_t n) {
  std::vector<Stratum> out;
  for (std::size_t j = 0; j <= n; ++j)
    out.push_back(Stratum{int(j), stabilizer_label(j, n),
                          "alpha sequences with " + std::to_string(j) +
                              " coordinates equal to 1/2"});
  return out;
}

} // namespace

RealizationDescriptor classical_realization_descriptor(std::size_t n) {
  RealizationDescriptor d;
  d.kind = RealizationDescriptor::Kind::ClassicalCube;
  d.n = n;
  d.ambient = "union over Z in [0,1]^" + std::to_string(n) +
              " of the cubes with vertices t_i in {z_i, 1-z_i}";
  for (std::size_t j = 0; j <= n; ++j)
    d.strata.push_back(Stratum{int(j), "permutation flips t <-> 1-t",
                               "Z with " + std::to_string(j) +
                                   " coordinates equal to 1/2"});
  return d;
}

NerveCellSample classical_nerve_cell(const ClassicalSummingFunctor &f,
                                     const std::vector<std::size_t> &points) {
  RationalVector z;
  for (auto p : points) z.push_back(f.lambda.at(p));
  NerveCellSample s;
  s.vertices = cube_vertices(z);
  s.distinguished = z;
  return s;
}

//===========================================================================
// Generic summing functors
//===========================================================================

GenericSummingTable build_generic_table(
    ZeroSumCategory &cat, std::size_t n_points,
    const std::vector<ZeroSumCategory::Obj> &assignment) {
  if (assignment.size() != n_points)
    fail("ShapeMismatch", "one singleton object per point required");
  GenericSummingTable t;
  t.n_points = n_points;
  t.singleton = assignment;
  const std::uint32_t count = std::uint32_t(1) << n_points;
  t.value.resize(count);
  t.value[0] = cat.zero();
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    int top = 31;
    while (!(mask & (std::uint32_t(1) << top))) --top;
    std::uint32_t rest = mask & ~(std::uint32_t(1) << top);
    if (rest == 0)
      t.value[mask] = assignment[top];
    else
      t.value[mask] = cat.sum(t.value[rest], assignment[top]).obj;
  }
  return t;
}

namespace {

// sum of morphisms out of the copair of injection composites
ZeroSumCategory::Mor sum_of_morphisms(ZeroSumCategory &cat,
                                      ZeroSumCategory::Mor f,
                                      ZeroSumCategory::Mor g) {
  auto s = cat.sum(cat.target(f), cat.target(g));
  return cat.copair(cat.compose(s.in_left, f), cat.compose(s.in_right, g));
}

} // namespace

ZeroSumCategory::Mor table_inclusion(ZeroSumCategory &cat,
                                     const GenericSummingTable &table,
                                     std::uint32_t sub, std::uint32_t super) {
  if ((sub & super) != sub)
    fail("NotSubset", "inclusion requires sub to be a subset of super");
  if (super == sub) return cat.identity(table.value[sub]);
  if (sub == 0) return cat.from_zero(table.value[super]);
  int top = 31;
  while (!(super & (std::uint32_t(1) << top))) --top;
  const std::uint32_t bit = std::uint32_t(1) << top;
  const std::uint32_t super_rest = super & ~bit;
  if (sub & bit) {
    const std::uint32_t sub_rest = sub & ~bit;
    if (sub_rest == 0) {
      // singleton {top} into sum(value[super_rest], c_top)
      return cat.compose(cat.sum(table.value[super_rest],
                                 table.singleton[top]).in_right,
                         cat.identity(table.singleton[top]));
    }
    return sum_of_morphisms(cat,
                            table_inclusion(cat, table, sub_rest, super_rest),
                            cat.identity(table.singleton[top]));
  }
  return cat.compose(cat.sum(table.value[super_rest],
                             table.singleton[top]).in_left,
                     table_inclusion(cat, table, sub, super_rest));
}

std::vector<GenericSummingTable> enumerate_summing(
    ZeroSumCategory &cat, std::size_t n_points,
    const std::vector<ZeroSumCategory::Obj> &candidates,
    std::uint64_t explosion_bound) {
  double projected = std::pow(double(candidates.size()), double(n_points));
  if (projected > double(explosion_bound))
    fail("ExplosionGuard", "too many singleton assignments");
  std::vector<GenericSummingTable> out;
  std::vector<std::size_t> pick(n_points, 0);
  while (true) {
    std::vector<ZeroSumCategory::Obj> assignment;
    for (auto p : pick) assignment.push_back(candidates.at(p));
    out.push_back(build_generic_table(cat, n_points, assignment));
    std::size_t pos = 0;
    while (pos < n_points && ++pick[pos] == candidates.size()) {
      pick[pos] = 0;
      ++pos;
    }
    if (pos == n_points) break;
  }
  return out;
}

bool verify_generic_summing(ZeroSumCategory &cat,
                            const GenericSummingTable &table) {
  const std::uint32_t count = std::uint32_t(1) << table.n_points;
  if (!cat.obj_eq(table.value[0], cat.zero())) return false;
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = 0; b < count; ++b) {
      if (a & b) continue;
      auto s = cat.sum(table.value[a], table.value[b]);
      if (!cat.obj_equiv(table.value[a | b], s.obj)) return false;
    }
  return true;
}

category::FiniteCategorySpec summing_functor_category(
    ZeroSumCategory &cat, const std::vector<GenericSummingTable> &tables,
    std::uint64_t explosion_bound) {
  category::FiniteCategorySpec spec;
  const std::size_t n_tables = tables.size();
  if (n_tables == 0) fail("ShapeMismatch", "no summing functors given");
  const std::size_t n_points = tables[0].n_points;
  const std::uint32_t count = std::uint32_t(1) << n_points;
  for (std::size_t i = 0; i < n_tables; ++i)
    spec.objects.push_back("phi" + std::to_string(i));

  // natural transformations with isomorphism components
  struct NatIso {
    std::size_t src, dst;
    std::vector<ZeroSumCategory::Mor> component; // per mask
  };
  std::vector<NatIso> isos;
  std::map<std::tuple<std::size_t, std::size_t,
                      std::vector<ZeroSumCategory::Mor>>,
           std::size_t>
      iso_index; // (src, dst, components) -> morphism id

  for (std::size_t a = 0; a < n_tables; ++a)
    for (std::size_t b = 0; b < n_tables; ++b) {
      // candidate iso components per mask
      std::vector<std::vector<ZeroSumCategory::Mor>> options(count);
      bool feasible = true;
      double projected = 1.0;
      for (std::uint32_t m = 0; m < count && feasible; ++m) {
        for (auto h : cat.hom(tables[a].value[m], tables[b].value[m]))
          if (cat.is_iso(h)) options[m].push_back(h);
        if (options[m].empty()) feasible = false;
        projected *= double(std::max<std::size_t>(options[m].size(), 1));
      }
      if (!feasible) continue;
      if (projected > double(explosion_bound))
        fail("ExplosionGuard", "too many candidate natural transformations");
      std::vector<std::size_t> pick(count, 0);
      while (true) {
        std::vector<ZeroSumCategory::Mor> comp(count);
        for (std::uint32_t m = 0; m < count; ++m) comp[m] = options[m][pick[m]];
        bool natural = true;
        for (std::uint32_t sub = 0; sub < count && natural; ++sub)
          for (std::uint32_t super = sub; super < count; ++super) {
            if ((sub & super) != sub || sub == super) continue;
            auto lhs = cat.compose(comp[super],
                                   table_inclusion(cat, tables[a], sub, super));
            auto rhs = cat.compose(table_inclusion(cat, tables[b], sub, super),
                                   comp[sub]);
            if (!cat.mor_eq(lhs, rhs)) {
              natural = false;
              break;
            }
          }
        if (natural) {
          std::size_t id = isos.size();
          isos.push_back(NatIso{a, b, comp});
          iso_index[{a, b, comp}] = id;
          spec.morphisms.push_back(category::MorphismSpec{
              "eta" + std::to_string(id), a, b});
        }
        std::size_t pos = 0;
        while (pos < count && ++pick[pos] == options[pos].size()) {
          pick[pos] = 0;
          ++pos;
        }
        if (pos == count) break;
      }
    }

  // identities and composition
  spec.identities.resize(n_tables);
  for (std::size_t i = 0; i < n_tables; ++i) {
    std::vector<ZeroSumCategory::Mor> comp(count);
    for (std::uint32_t m = 0; m < count; ++m)
      comp[m] = cat.identity(tables[i].value[m]);
    auto it = iso_index.find({i, i, comp});
    if (it == iso_index.end())
      fail("InterfaceViolation", "identity transformation not enumerated");
    spec.identities[i] = it->second;
  }
  for (std::size_t f = 0; f < isos.size(); ++f)
    for (std::size_t g = 0; g < isos.size(); ++g) {
      if (isos[f].dst != isos[g].src) continue;
      std::vector<ZeroSumCategory::Mor> comp(count);
      for (std::uint32_t m = 0; m < count; ++m)
        comp[m] = cat.compose(isos[g].component[m], isos[f].component[m]);
      auto it = iso_index.find({isos[f].src, isos[g].dst, comp});
      if (it == iso_index.end())
        fail("InterfaceViolation", "composite transformation not enumerated");
      spec.composition[{g, f}] = it->second;
    }
  spec.validate();
  return spec;
}

cubical::ProbCubicalSet prob_gamma_eval(const probcat::ProbPointedSet &x,
                                        const std::vector<TermNerve> &nerves) {
  std::vector<cubical::ProbCubicalTerm> terms;
  for (std::size_t i = 0; i < x.terms.size(); ++i) {
    const cubical::TruncatedCubicalSet *found = nullptr;
    for (const auto &tn : nerves)
      if (tn.term == i) found = &tn.nerve;
    if (!found)
      fail("MissingTermNerve", "no nerve supplied for term " +
                                   std::to_string(i));
    terms.push_back(cubical::ProbCubicalTerm{x.terms[i].weight, *found});
  }
  return cubical::make_prob_cubical(std::move(terms));
}

} // namespace gammacat::summing
