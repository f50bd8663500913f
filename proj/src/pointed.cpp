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

#include "gammacat/pointed.hpp"

#include <algorithm>
#include <string>

namespace gammacat::pointed {

PointedSet make_pointed_set(std::size_t size, std::size_t base) {
  if (size == 0) fail("ShapeMismatch", "pointed set must be nonempty");
  if (base >= size) fail("ShapeMismatch", "basepoint index out of range");
  return PointedSet{size, base};
}

PointedMap make_pointed_map(PointedSet source, PointedSet target,
                            std::vector<std::size_t> table) {
  if (table.size() != source.size)
    fail("ShapeMismatch", "map table has wrong length");
  for (auto v : table)
    if (v >= target.size) fail("ShapeMismatch", "map value out of range");
  if (table[source.base] != target.base)
    fail("ShapeMismatch", "map does not preserve the basepoint");
  return PointedMap{source, target, std::move(table)};
}

PointedMap identity_map(const PointedSet &x) {
  std::vector<std::size_t> t(x.size);
  for (std::size_t i = 0; i < x.size; ++i) t[i] = i;
  return PointedMap{x, x, std::move(t)};
}

PointedMap compose(const PointedMap &second, const PointedMap &first) {
  if (first.target != second.source)
    fail("SourceTargetMismatch", "pointed maps are not composable");
  std::vector<std::size_t> t(first.table.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = second.table[first.table[i]];
  return PointedMap{first.source, second.target, std::move(t)};
}

bool is_isomorphism(const PointedMap &f) {
  if (f.source.size != f.target.size) return false;
  std::vector<bool> hit(f.target.size, false);
  for (auto v : f.table) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

PointedMap constant_map(const PointedSet &source, const PointedSet &target) {
  return PointedMap{source, target,
                    std::vector<std::size_t>(source.size, target.base)};
}

Wedge wedge(const PointedSet &x, const PointedSet &y) {
  PointedSet obj{x.size + y.size - 1, x.base};
  std::vector<std::size_t> tl(x.size);
  for (std::size_t i = 0; i < x.size; ++i) tl[i] = i;
  std::vector<std::size_t> tr(y.size);
  std::size_t next = x.size;
  for (std::size_t j = 0; j < y.size; ++j)
    tr[j] = (j == y.base) ? x.base : next++;
  return Wedge{obj, PointedMap{x, obj, std::move(tl)},
               PointedMap{y, obj, std::move(tr)}};
}

PointedMap wedge_copair(const Wedge &w, const PointedMap &f,
                        const PointedMap &g) {
  if (f.target != g.target)
    fail("TargetMismatch", "wedge copair requires a common target");
  if (f.source != w.in_left.source || g.source != w.in_right.source)
    fail("SourceTargetMismatch", "copair factors do not match the wedge");
  std::vector<std::size_t> t(w.object.size);
  for (std::size_t i = 0; i < f.source.size; ++i) t[w.in_left.table[i]] = f.table[i];
  for (std::size_t j = 0; j < g.source.size; ++j) t[w.in_right.table[j]] = g.table[j];
  return PointedMap{w.object, f.target, std::move(t)};
}

std::size_t Smash::pair_index(const PointedSet &x, const PointedSet &y,
                              std::size_t a, std::size_t b) const {
  if (a == x.base || b == y.base) return 0;
  std::size_t ra = a < x.base ? a : a - 1;
  std::size_t rb = b < y.base ? b : b - 1;
  return 1 + ra * (y.size - 1) + rb;
}

Smash smash(const PointedSet &x, const PointedSet &y) {
  return Smash{PointedSet{reduced_size(x) * reduced_size(y) + 1, 0}};
}

PointedMap smash_map(const PointedSet &sx, const PointedSet &sy,
                     const PointedMap &f, const PointedMap &g) {
  if (f.source != sx || g.source != sy)
    fail("SourceTargetMismatch", "smash_map factors do not match");
  Smash s = smash(sx, sy);
  Smash t = smash(f.target, g.target);
  std::vector<std::size_t> table(s.object.size, 0);
  for (std::size_t a = 0; a < sx.size; ++a)
    for (std::size_t b = 0; b < sy.size; ++b)
      table[s.pair_index(sx, sy, a, b)] =
          t.pair_index(f.target, g.target, f.table[a], g.table[b]);
  return PointedMap{s.object, t.object, std::move(table)};
}

std::vector<PointedMap> all_pointed_maps(const PointedSet &source,
                                         const PointedSet &target) {
  std::vector<PointedMap> out;
  std::vector<std::size_t> table(source.size, 0);
  table[source.base] = target.base;
  // odometer over the non-base slots
  std::vector<std::size_t> free_slots;
  for (std::size_t i = 0; i < source.size; ++i)
    if (i != source.base) free_slots.push_back(i);
  std::size_t count = 1;
  for (std::size_t k = 0; k < free_slots.size(); ++k) count *= target.size;
  for (std::size_t code = 0; code < count; ++code) {
    std::size_t c = code;
    for (auto slot : free_slots) {
      table[slot] = c % target.size;
      c /= target.size;
    }
    out.push_back(PointedMap{source, target, table});
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace gammacat::pointed
