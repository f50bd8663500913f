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

#ifndef GAMMACAT_POINTED_HPP
#define GAMMACAT_POINTED_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "gammacat/error.hpp"

namespace gammacat::pointed {

struct PointedSet {
  std::size_t size = 1;
  std::size_t base = 0;

  auto operator<=>(const PointedSet &) const = default;
};

PointedSet make_pointed_set(std::size_t size, std::size_t base);

inline std::size_t reduced_size(const PointedSet &x) { return x.size - 1; }

struct PointedMap {
  PointedSet source;
  PointedSet target;
  std::vector<std::size_t> table; // length source.size, basepoint-preserving

  auto operator<=>(const PointedMap &) const = default;
};

PointedMap make_pointed_map(PointedSet source, PointedSet target,
                            std::vector<std::size_t> table);

PointedMap identity_map(const PointedSet &x);

// second o first
PointedMap compose(const PointedMap &second, const PointedMap &first);

bool is_isomorphism(const PointedMap &f);

PointedMap constant_map(const PointedSet &source, const PointedSet &target);

// Wedge x v y: basepoints glued. Point layout: the points of x keep their
// indices; the non-base points of y follow in order. Base = x.base.
struct Wedge {
  PointedSet object;
  PointedMap in_left;
  PointedMap in_right;
};
Wedge wedge(const PointedSet &x, const PointedSet &y);

// Copairing [f,g] : x v y -> z of pointed maps with a common target.
PointedMap wedge_copair(const Wedge &w, const PointedMap &f,
                        const PointedMap &g);

// Smash x ^ y: basepoint 0, then pairs (a,b) of non-base points in row-major
// order.
struct Smash {
  PointedSet object;
  // index of the class of (a, b) in the smash
  std::size_t pair_index(const PointedSet &x, const PointedSet &y,
                         std::size_t a, std::size_t b) const;
};
Smash smash(const PointedSet &x, const PointedSet &y);

// Map product f ^ g on smashes (used by property tests).
PointedMap smash_map(const PointedSet &sx, const PointedSet &sy,
                     const PointedMap &f, const PointedMap &g);

// All pointed maps source -> target in lexicographic table order.
std::vector<PointedMap> all_pointed_maps(const PointedSet &source,
                                         const PointedSet &target);

} // namespace gammacat::pointed

#endif
