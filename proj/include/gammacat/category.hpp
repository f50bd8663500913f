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

#ifndef GAMMACAT_CATEGORY_HPP
#define GAMMACAT_CATEGORY_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gammacat/error.hpp"

namespace gammacat::category {

struct MorphismSpec {
  std::string name;
  std::size_t src = 0;
  std::size_t dst = 0;
};

// A finite category given by explicit composition tables. Used as the input
// of the cubical nerve and as the output of summing-functor enumeration.
struct FiniteCategorySpec {
  std::vector<std::string> objects;
  std::vector<MorphismSpec> morphisms;
  std::vector<std::size_t> identities; // object -> identity morphism index
  // (second, first) -> composite, defined when dst(first) == src(second)
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> composition;
  std::size_t basepoint_object = 0;

  std::size_t compose(std::size_t second, std::size_t first) const;
  std::vector<std::size_t> hom(std::size_t src, std::size_t dst) const;
  // identity and associativity laws on the full table
  void validate() const;
};

FiniteCategorySpec discrete_category(std::size_t n_objects);

// One-object category with the given monoid multiplication table;
// table[a][b] = a * b, element 0 must be the unit.
FiniteCategorySpec monoid_category(
    const std::vector<std::vector<std::size_t>> &table);

// The cyclic group Z/n as a one-object groupoid.
FiniteCategorySpec cyclic_group_category(std::size_t n);

// The poset {0,1}^n with componentwise order (the n-cube as a category).
FiniteCategorySpec cube_poset_category(std::size_t n);

struct FunctorSpec {
  std::vector<std::size_t> object_map;
  std::vector<std::size_t> morphism_map;
};

// Checks identity preservation, endpoint compatibility and composition.
void validate_functor(const FiniteCategorySpec &src,
                      const FiniteCategorySpec &dst, const FunctorSpec &f);

} // namespace gammacat::category

#endif
