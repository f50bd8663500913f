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

#include "gammacat/category.hpp"

namespace gammacat::category {

std::size_t FiniteCategorySpec::compose(std::size_t second,
                                        std::size_t first) const {
  if (morphisms.at(first).dst != morphisms.at(second).src)
    fail("SourceTargetMismatch",
         "morphisms " + morphisms[second].name + " o " + morphisms[first].name +
             " are not composable");
  auto it = composition.find({second, first});
  if (it == composition.end())
    fail("ParseError", "composition table is missing " +
                           morphisms[second].name + " o " +
                           morphisms[first].name);
  return it->second;
}

std::vector<std::size_t> FiniteCategorySpec::hom(std::size_t src,
                                                 std::size_t dst) const {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < morphisms.size(); ++m)
    if (morphisms[m].src == src && morphisms[m].dst == dst) out.push_back(m);
  return out;
}

void FiniteCategorySpec::validate() const {
  if (identities.size() != objects.size())
    fail("ParseError", "one identity per object required");
  if (basepoint_object >= objects.size())
    fail("ParseError", "basepoint object out of range");
  for (std::size_t o = 0; o < objects.size(); ++o) {
    const auto &id = morphisms.at(identities[o]);
    if (id.src != o || id.dst != o)
      fail("ParseError", "identity of '" + objects[o] + "' has wrong endpoints");
  }
  for (std::size_t m = 0; m < morphisms.size(); ++m) {
    if (morphisms[m].src >= objects.size() || morphisms[m].dst >= objects.size())
      fail("ParseError", "morphism '" + morphisms[m].name +
                             "' references a missing object");
    if (compose(m, identities[morphisms[m].src]) != m ||
        compose(identities[morphisms[m].dst], m) != m)
      fail("ParseError", "identity law fails at '" + morphisms[m].name + "'");
  }
  for (std::size_t f = 0; f < morphisms.size(); ++f)
    for (std::size_t g = 0; g < morphisms.size(); ++g) {
      if (morphisms[f].dst != morphisms[g].src) continue;
      std::size_t gf = compose(g, f);
      for (std::size_t h = 0; h < morphisms.size(); ++h) {
        if (morphisms[g].dst != morphisms[h].src) continue;
        if (compose(h, gf) != compose(compose(h, g), f))
          fail("ParseError", "associativity fails at (" + morphisms[h].name +
                                 ", " + morphisms[g].name + ", " +
                                 morphisms[f].name + ")");
      }
    }
}

FiniteCategorySpec discrete_category(std::size_t n_objects) {
  FiniteCategorySpec c;
  for (std::size_t i = 0; i < n_objects; ++i) {
    c.objects.push_back("x" + std::to_string(i));
    c.morphisms.push_back(MorphismSpec{"id" + std::to_string(i), i, i});
    c.identities.push_back(i);
    c.composition[{i, i}] = i;
  }
  return c;
}

FiniteCategorySpec monoid_category(
    const std::vector<std::vector<std::size_t>> &table) {
  FiniteCategorySpec c;
  c.objects.push_back("x");
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i)
    c.morphisms.push_back(MorphismSpec{"m" + std::to_string(i), 0, 0});
  c.identities.push_back(0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) c.composition[{a, b}] = table[a][b];
  c.validate();
  return c;
}

FiniteCategorySpec cyclic_group_category(std::size_t n) {
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return monoid_category(table);
}

FiniteCategorySpec cube_poset_category(std::size_t n) {
  FiniteCategorySpec c;
  const std::size_t count = std::size_t(1) << n;
  for (std::size_t v = 0; v < count; ++v)
    c.objects.push_back("v" + std::to_string(v));
  // one morphism for every pair v <= w in the product order
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrow;
  for (std::size_t v = 0; v < count; ++v)
    for (std::size_t w = 0; w < count; ++w)
      if ((v & w) == v) {
        arrow[{v, w}] = c.morphisms.size();
        c.morphisms.push_back(MorphismSpec{
            "a" + std::to_string(v) + "_" + std::to_string(w), v, w});
      }
  for (std::size_t v = 0; v < count; ++v) c.identities.push_back(arrow[{v, v}]);
  for (const auto &[vw, m1] : arrow)
    for (const auto &[wz, m2] : arrow)
      if (vw.second == wz.first)
        c.composition[{m2, m1}] = arrow[{vw.first, wz.second}];
  c.validate();
  return c;
}

void validate_functor(const FiniteCategorySpec &src,
                      const FiniteCategorySpec &dst, const FunctorSpec &f) {
  if (f.object_map.size() != src.objects.size() ||
      f.morphism_map.size() != src.morphisms.size())
    fail("ParseError", "functor tables have wrong lengths");
  for (std::size_t m = 0; m < src.morphisms.size(); ++m) {
    const auto &spec = src.morphisms[m];
    const auto &image = dst.morphisms.at(f.morphism_map[m]);
    if (image.src != f.object_map[spec.src] ||
        image.dst != f.object_map[spec.dst])
      fail("ParseError", "functor breaks endpoints at '" + spec.name + "'");
  }
  for (std::size_t o = 0; o < src.objects.size(); ++o)
    if (f.morphism_map[src.identities[o]] != dst.identities[f.object_map[o]])
      fail("ParseError", "functor does not preserve identities");
  for (const auto &[pair, comp] : src.composition)
    if (f.morphism_map[comp] !=
        dst.compose(f.morphism_map[pair.first], f.morphism_map[pair.second]))
      fail("ParseError", "functor does not preserve composition");
}

} // namespace gammacat::category
