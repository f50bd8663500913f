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

#include "gammacat/cubical.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace gammacat::cubical {

namespace {

//===========================================================================
// Symbolic interval maps
//
// Faces, degeneracies and connections are generated by the interval maps
//   delta^a_i : insert the constant a at slot i,
//   s_i       : drop slot i,
//   gamma_i   : replace slots (i, i+1) by max(t_i, t_i+1).
// Every output coordinate of a composite of two generators is a constant or
// a max over a set of inputs; this canonical form decides equality of
// composites, so the full relation set can be checked without transcribing
// the relation table by hand.
//===========================================================================

struct SymOut {
  int kind = 2; // 0: const 0, 1: const 1, 2: max over args
  std::vector<int> args;

  bool operator==(const SymOut &) const = default;
  bool operator<(const SymOut &o) const {
    if (kind != o.kind) return kind < o.kind;
    return args < o.args;
  }
};

using SymMap = std::vector<SymOut>; // outputs of a map I^p -> I^q

SymOut proj(int k) { return SymOut{2, {k}}; }

// delta^a_i : I^{n-1} -> I^n
SymMap sym_face(int n, int a, int i) {
  SymMap m;
  for (int o = 0; o < n; ++o) {
    if (o == i - 1)
      m.push_back(SymOut{a, {}});
    else
      m.push_back(proj(o < i - 1 ? o : o - 1));
  }
  return m;
}

// s_i : I^{n+1} -> I^n
SymMap sym_deg(int n, int i) {
  SymMap m;
  for (int o = 0; o < n; ++o) m.push_back(proj(o < i - 1 ? o : o + 1));
  return m;
}

// gamma_i : I^{n+1} -> I^n
SymMap sym_conn(int n, int i) {
  SymMap m;
  for (int o = 0; o < n; ++o) {
    if (o == i - 1)
      m.push_back(SymOut{2, {i - 1, i}});
    else
      m.push_back(proj(o < i - 1 ? o : o + 1));
  }
  return m;
}

// outer o inner, with inner applied first
SymMap sym_compose(const SymMap &outer, const SymMap &inner) {
  SymMap out;
  for (const auto &o : outer) {
    if (o.kind != 2) {
      out.push_back(o);
      continue;
    }
    bool one = false;
    std::set<int> projs;
    for (int arg : o.args) {
      const SymOut &sub = inner.at(arg);
      if (sub.kind == 1) one = true;
      if (sub.kind == 2) projs.insert(sub.args.begin(), sub.args.end());
    }
    if (one)
      out.push_back(SymOut{1, {}});
    else if (projs.empty())
      out.push_back(SymOut{0, {}});
    else
      out.push_back(SymOut{2, std::vector<int>(projs.begin(), projs.end())});
  }
  return out;
}

bool sym_is_identity(const SymMap &m, int p) {
  if (static_cast<int>(m.size()) != p) return false;
  for (int o = 0; o < p; ++o)
    if (!(m[o] == proj(o))) return false;
  return true;
}

struct Generator {
  int from_level; // table domain
  int to_level;   // table codomain
  const std::vector<std::size_t> *table;
  SymMap cocube;  // I^{to_level} -> I^{from_level}
  std::string name;
};

std::vector<Generator> all_generators(const TruncatedCubicalSet &k) {
  std::vector<Generator> gens;
  for (int n = 1; n <= k.top_dim; ++n)
    for (int a = 0; a < 2; ++a)
      for (int i = 1; i <= n; ++i)
        gens.push_back(Generator{n, n - 1, &k.faces[n][a][i - 1],
                                 sym_face(n, a, i),
                                 "d" + std::to_string(a) + "_" +
                                     std::to_string(i) + "@" +
                                     std::to_string(n)});
  for (int n = 0; n < k.top_dim; ++n)
    for (int i = 1; i <= n + 1; ++i)
      gens.push_back(Generator{n, n + 1, &k.degen[n][i - 1], sym_deg(n, i),
                               "s" + std::to_string(i) + "@" +
                                   std::to_string(n)});
  for (int n = 1; n < k.top_dim; ++n)
    for (int i = 1; i <= n; ++i)
      gens.push_back(Generator{n, n + 1, &k.conn[n][i - 1], sym_conn(n, i),
                               "g" + std::to_string(i) + "@" +
                                   std::to_string(n)});
  return gens;
}

void check_shapes(const TruncatedCubicalSet &k) {
  const int d = k.top_dim;
  if (d < 0) fail("ShapeMismatch", "negative truncation dimension");
  auto expect = [&](bool ok, const std::string &what) {
    if (!ok) fail("ShapeMismatch", "cubical set tables malformed: " + what);
  };
  expect(k.level_sizes.size() == std::size_t(d + 1), "level_sizes length");
  expect(k.basepoint.size() == std::size_t(d + 1), "basepoint length");
  expect(k.faces.size() >= std::size_t(d + 1), "faces length");
  expect(d == 0 || k.degen.size() >= std::size_t(d), "degen length");
  expect(d <= 1 || k.conn.size() >= std::size_t(d), "conn length");
  for (int n = 0; n <= d; ++n) {
    expect(k.level_sizes[n] > 0, "empty level");
    expect(k.basepoint[n] < k.level_sizes[n], "basepoint out of range");
    if (n >= 1) {
      for (int a = 0; a < 2; ++a) {
        expect(k.faces[n][a].size() == std::size_t(n), "face arity");
        for (int i = 1; i <= n; ++i) {
          expect(k.faces[n][a][i - 1].size() == k.level_sizes[n],
                 "face table size");
          for (auto v : k.faces[n][a][i - 1])
            expect(v < k.level_sizes[n - 1], "face value range");
        }
      }
    }
    if (n < d) {
      expect(k.degen[n].size() == std::size_t(n + 1), "degeneracy arity");
      for (int i = 1; i <= n + 1; ++i) {
        expect(k.degen[n][i - 1].size() == k.level_sizes[n],
               "degeneracy table size");
        for (auto v : k.degen[n][i - 1])
          expect(v < k.level_sizes[n + 1], "degeneracy value range");
      }
      if (n >= 1) {
        expect(k.conn[n].size() == std::size_t(n), "connection arity");
        for (int i = 1; i <= n; ++i) {
          expect(k.conn[n][i - 1].size() == k.level_sizes[n],
                 "connection table size");
          for (auto v : k.conn[n][i - 1])
            expect(v < k.level_sizes[n + 1], "connection value range");
        }
      }
    }
  }
}

} // namespace

void validate_cubical(const TruncatedCubicalSet &k) {
  check_shapes(k);

  // basepoint chain is fixed by every structure map
  auto gens = all_generators(k);
  for (const auto &g : gens)
    if ((*g.table)[k.basepoint[g.from_level]] != k.basepoint[g.to_level])
      fail("RelationViolated",
           "basepoint not fixed by " + g.name);

  // group depth-two composites by their symbolic form
  struct Key {
    int p, r;
    SymMap sym;
    bool operator<(const Key &o) const {
      if (p != o.p) return p < o.p;
      if (r != o.r) return r < o.r;
      return sym < o.sym;
    }
  };
  std::map<Key, std::vector<std::pair<const Generator *, const Generator *>>>
      groups;
  for (const auto &g : gens)
    for (const auto &f : gens) {
      if (f.from_level != g.to_level) continue;
      Key key{f.to_level, g.from_level, sym_compose(g.cocube, f.cocube)};
      groups[key].push_back({&g, &f});
    }

  for (const auto &[key, pairs] : groups) {
    const bool ident = key.p == key.r && sym_is_identity(key.sym, key.p);
    if (pairs.size() < 2 && !ident) continue;
    const std::size_t cells = k.level_sizes[key.r];
    for (std::size_t z = 0; z < cells; ++z) {
      std::size_t ref =
          (*pairs[0].second->table)[(*pairs[0].first->table)[z]];
      if (ident && ref != z)
        fail("RelationViolated",
             pairs[0].first->name + " then " + pairs[0].second->name +
                 " is not the identity on cell " + std::to_string(z));
      for (std::size_t q = 1; q < pairs.size(); ++q) {
        std::size_t got =
            (*pairs[q].second->table)[(*pairs[q].first->table)[z]];
        if (got != ref)
          fail("RelationViolated",
               pairs[0].first->name + " then " + pairs[0].second->name +
                   " != " + pairs[q].first->name + " then " +
                   pairs[q].second->name + " on cell " + std::to_string(z));
      }
    }
  }
}

TruncatedCubicalSet discrete_pointed(std::size_t size, std::size_t base,
                                     int top_dim) {
  if (size == 0 || base >= size) fail("ShapeMismatch", "bad discrete set");
  TruncatedCubicalSet k;
  k.top_dim = top_dim;
  k.level_sizes.assign(top_dim + 1, size);
  k.basepoint.assign(top_dim + 1, base);
  k.faces.resize(top_dim + 1);
  k.degen.resize(std::max(top_dim, 1));
  k.conn.resize(std::max(top_dim, 1));
  std::vector<std::size_t> id(size);
  for (std::size_t i = 0; i < size; ++i) id[i] = i;
  for (int n = 1; n <= top_dim; ++n)
    for (int a = 0; a < 2; ++a) k.faces[n][a].assign(n, id);
  for (int n = 0; n < top_dim; ++n) {
    k.degen[n].assign(std::size_t(n + 1), id);
    if (n >= 1) k.conn[n].assign(std::size_t(n), id);
  }
  k.dimensionally_complete = true;
  validate_cubical(k);
  return k;
}

TruncatedCubicalSet circle_model() {
  TruncatedCubicalSet k;
  k.top_dim = 2;
  k.level_sizes = {1, 2, 4};
  k.basepoint = {0, 0, 0};
  k.faces.resize(3);
  k.degen.resize(2);
  k.conn.resize(2);
  // level 1: 0 = s(*), 1 = e; both faces of both cells are the point
  for (int a = 0; a < 2; ++a) k.faces[1][a] = {{0, 0}};
  k.degen[0] = {{0}}; // s_1(*) = cell 0
  // level 2: 0 = s1 s(*), 1 = s1 e, 2 = s2 e, 3 = g1 e
  k.degen[1] = {{0, 1}, {0, 2}};
  k.conn[1] = {{0, 3}};
  // faces: i = 1 and i = 2, a = 0/1
  k.faces[2][0] = {{0, 1, 0, 1}, {0, 0, 1, 1}};
  k.faces[2][1] = {{0, 1, 0, 0}, {0, 0, 1, 0}};
  k.dimensionally_complete = true;
  validate_cubical(k);
  return k;
}

//===========================================================================
// Cubical nerve
//===========================================================================

namespace {

struct NerveCell {
  std::vector<std::size_t> vertex_obj;
  std::vector<std::size_t> edge_mor;

  bool operator<(const NerveCell &o) const {
    if (vertex_obj != o.vertex_obj) return vertex_obj < o.vertex_obj;
    return edge_mor < o.edge_mor;
  }
};

std::size_t strip_bit(std::size_t v, int d) {
  std::size_t low = v & ((std::size_t(1) << d) - 1);
  return low | ((v >> (d + 1)) << d);
}

std::size_t edge_index(int n, int d, std::size_t v) {
  return std::size_t(d) * (std::size_t(1) << (n - 1)) + strip_bit(v, d);
}

// all functors I^n -> C, in deterministic order
std::vector<NerveCell> enumerate_level(const category::FiniteCategorySpec &c,
                                       int n, std::uint64_t bound) {
  const std::size_t verts = std::size_t(1) << n;
  const std::size_t edges = n == 0 ? 0 : std::size_t(n) * (verts / 2);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> hom_sizes;
  for (const auto &m : c.morphisms) ++hom_sizes[{m.src, m.dst}];
  std::size_t max_hom = 1;
  for (const auto &[k, v] : hom_sizes) max_hom = std::max(max_hom, v);
  double projected = std::pow(double(c.objects.size()), double(verts)) *
                     std::pow(double(max_hom), double(edges));
  if (projected > double(bound))
    fail("ExplosionGuard", "level " + std::to_string(n) +
                               " would enumerate about " +
                               std::to_string(projected) + " candidates");

  std::vector<NerveCell> out;
  std::vector<std::size_t> vassign(verts, 0);
  // odometer over vertex object assignments
  while (true) {
    // candidate morphisms per edge
    std::vector<std::vector<std::size_t>> options(edges);
    bool feasible = true;
    for (int d = 0; d < n && feasible; ++d)
      for (std::size_t v = 0; v < verts; ++v) {
        if (v & (std::size_t(1) << d)) continue;
        auto homs = c.hom(vassign[v], vassign[v | (std::size_t(1) << d)]);
        if (homs.empty()) {
          feasible = false;
          break;
        }
        options[edge_index(n, d, v)] = std::move(homs);
      }
    if (feasible) {
      // DFS over edges with commuting-square checks
      std::vector<std::size_t> pick(edges, 0);
      std::size_t depth = 0;
      auto squares_ok = [&](std::size_t filled) {
        // check squares whose four edges are all assigned; edge order is
        // (d, stripped v), so test only squares containing edge `filled`
        for (int d1 = 0; d1 < n; ++d1)
          for (int d2 = d1 + 1; d2 < n; ++d2)
            for (std::size_t v = 0; v < verts; ++v) {
              if (v & ((std::size_t(1) << d1) | (std::size_t(1) << d2)))
                continue;
              std::size_t e1 = edge_index(n, d1, v);
              std::size_t e2 =
                  edge_index(n, d2, v | (std::size_t(1) << d1));
              std::size_t e3 = edge_index(n, d2, v);
              std::size_t e4 =
                  edge_index(n, d1, v | (std::size_t(1) << d2));
              if (e1 != filled && e2 != filled && e3 != filled && e4 != filled)
                continue;
              if (std::max({e1, e2, e3, e4}) > filled) continue;
              std::size_t left =
                  c.compose(options[e2][pick[e2]], options[e1][pick[e1]]);
              std::size_t right =
                  c.compose(options[e4][pick[e4]], options[e3][pick[e3]]);
              if (left != right) return false;
            }
        return true;
      };
      if (edges == 0) {
        out.push_back(NerveCell{vassign, {}});
      } else {
        while (true) {
          if (depth == edges) {
            NerveCell cell{vassign, {}};
            cell.edge_mor.resize(edges);
            for (std::size_t e = 0; e < edges; ++e)
              cell.edge_mor[e] = options[e][pick[e]];
            out.push_back(std::move(cell));
            --depth;
            ++pick[depth];
          } else if (pick[depth] >= options[depth].size()) {
            if (depth == 0) break;
            pick[depth] = 0;
            --depth;
            ++pick[depth];
          } else if (squares_ok(depth)) {
            ++depth;
            if (depth < edges) pick[depth] = 0;
          } else {
            ++pick[depth];
          }
        }
      }
    }
    // advance odometer
    std::size_t pos = 0;
    while (pos < verts && ++vassign[pos] == c.objects.size()) {
      vassign[pos] = 0;
      ++pos;
    }
    if (pos == verts) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// precompose a level-n cell with a monotone cube map h : {0,1}^m -> {0,1}^n
// that sends edges to edges or vertices
NerveCell restrict_cell(const category::FiniteCategorySpec &c,
                        const NerveCell &cell, int m, int n,
                        const std::vector<std::size_t> &h) {
  const std::size_t verts = std::size_t(1) << m;
  NerveCell out;
  out.vertex_obj.resize(verts);
  for (std::size_t w = 0; w < verts; ++w) out.vertex_obj[w] = cell.vertex_obj[h[w]];
  if (m == 0) return out;
  out.edge_mor.resize(std::size_t(m) * (verts / 2));
  for (int d = 0; d < m; ++d)
    for (std::size_t w = 0; w < verts; ++w) {
      if (w & (std::size_t(1) << d)) continue;
      std::size_t u1 = h[w], u2 = h[w | (std::size_t(1) << d)];
      std::size_t &slot = out.edge_mor[edge_index(m, d, w)];
      if (u1 == u2) {
        slot = c.identities[cell.vertex_obj[u1]];
      } else {
        std::size_t diff = u1 ^ u2;
        int dir = 0;
        while (!(diff & (std::size_t(1) << dir))) ++dir;
        slot = cell.edge_mor[edge_index(n, dir, u1)];
      }
    }
  return out;
}

std::vector<std::size_t> cube_map_insert(int m, int pos, int a) {
  // delta^a : {0,1}^m -> {0,1}^{m+1}, insert bit a at position pos
  std::vector<std::size_t> h(std::size_t(1) << m);
  for (std::size_t w = 0; w < h.size(); ++w) {
    std::size_t low = w & ((std::size_t(1) << pos) - 1);
    std::size_t high = (w >> pos) << (pos + 1);
    h[w] = low | high | (std::size_t(a) << pos);
  }
  return h;
}

std::vector<std::size_t> cube_map_drop(int m, int pos) {
  // s : {0,1}^m -> {0,1}^{m-1}, drop bit pos
  std::vector<std::size_t> h(std::size_t(1) << m);
  for (std::size_t w = 0; w < h.size(); ++w) h[w] = strip_bit(w, pos);
  return h;
}

std::vector<std::size_t> cube_map_merge(int m, int pos) {
  // gamma : {0,1}^m -> {0,1}^{m-1}, replace bits (pos, pos+1) by their max
  std::vector<std::size_t> h(std::size_t(1) << m);
  for (std::size_t w = 0; w < h.size(); ++w) {
    std::size_t b = ((w >> pos) | (w >> (pos + 1))) & 1;
    std::size_t dropped = strip_bit(strip_bit(w, pos + 1), pos);
    std::size_t lo = dropped & ((std::size_t(1) << pos) - 1);
    std::size_t hi = (dropped >> pos) << (pos + 1);
    h[w] = lo | hi | (b << pos);
  }
  return h;
}

} // namespace

TruncatedCubicalSet cubical_nerve(const category::FiniteCategorySpec &c,
                                  int n_max, std::uint64_t explosion_bound) {
  c.validate();
  TruncatedCubicalSet k;
  k.top_dim = n_max;
  k.level_sizes.resize(n_max + 1);
  k.basepoint.resize(n_max + 1);
  k.faces.resize(n_max + 1);
  k.degen.resize(std::max(n_max, 1));
  k.conn.resize(std::max(n_max, 1));

  std::vector<std::vector<NerveCell>> cells(n_max + 1);
  std::vector<std::map<NerveCell, std::size_t>> index(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    cells[n] = enumerate_level(c, n, explosion_bound);
    for (std::size_t i = 0; i < cells[n].size(); ++i)
      index[n].emplace(cells[n][i], i);
    k.level_sizes[n] = cells[n].size();
    // constant functor at the basepoint object
    NerveCell base;
    base.vertex_obj.assign(std::size_t(1) << n, c.basepoint_object);
    if (n > 0)
      base.edge_mor.assign(std::size_t(n) << (n - 1),
                           c.identities[c.basepoint_object]);
    k.basepoint[n] = index[n].at(base);
  }

  auto table_for = [&](int from, int to, const std::vector<std::size_t> &h) {
    std::vector<std::size_t> t(cells[from].size());
    for (std::size_t z = 0; z < cells[from].size(); ++z)
      t[z] = index[to].at(restrict_cell(c, cells[from][z], to, from, h));
    return t;
  };

  for (int n = 1; n <= n_max; ++n)
    for (int a = 0; a < 2; ++a) {
      k.faces[n][a].resize(n);
      for (int i = 1; i <= n; ++i)
        k.faces[n][a][i - 1] = table_for(n, n - 1, cube_map_insert(n - 1, i - 1, a));
    }
  for (int n = 0; n < n_max; ++n) {
    k.degen[n].resize(n + 1);
    for (int i = 1; i <= n + 1; ++i)
      k.degen[n][i - 1] = table_for(n, n + 1, cube_map_drop(n + 1, i - 1));
    if (n >= 1) {
      k.conn[n].resize(n);
      for (int i = 1; i <= n; ++i)
        k.conn[n][i - 1] = table_for(n, n + 1, cube_map_merge(n + 1, i - 1));
    }
  }

  // Only a category without non-identity morphisms is guaranteed to have
  // all higher cells degenerate; other nerves stay flagged as truncated.
  bool discrete = true;
  for (std::size_t m = 0; m < c.morphisms.size(); ++m)
    if (c.morphisms[m].src != c.morphisms[m].dst ||
        m != c.identities[c.morphisms[m].src])
      discrete = false;
  k.dimensionally_complete = discrete;

  validate_cubical(k);
  return k;
}

std::vector<std::vector<std::size_t>> nerve_map(
    const category::FiniteCategorySpec &src,
    const category::FiniteCategorySpec &dst, const category::FunctorSpec &f,
    const TruncatedCubicalSet &nerve_src,
    const TruncatedCubicalSet &nerve_dst) {
  validate_functor(src, dst, f);
  int n_max = std::min(nerve_src.top_dim, nerve_dst.top_dim);
  // rebuild the cell lists (deterministic enumeration order)
  std::vector<std::vector<std::size_t>> out(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    auto scells = enumerate_level(src, n, ~std::uint64_t(0));
    auto dcells = enumerate_level(dst, n, ~std::uint64_t(0));
    std::map<NerveCell, std::size_t> dindex;
    for (std::size_t i = 0; i < dcells.size(); ++i) dindex.emplace(dcells[i], i);
    out[n].resize(scells.size());
    for (std::size_t z = 0; z < scells.size(); ++z) {
      NerveCell img;
      img.vertex_obj.resize(scells[z].vertex_obj.size());
      img.edge_mor.resize(scells[z].edge_mor.size());
      for (std::size_t v = 0; v < img.vertex_obj.size(); ++v)
        img.vertex_obj[v] = f.object_map[scells[z].vertex_obj[v]];
      for (std::size_t e = 0; e < img.edge_mor.size(); ++e)
        img.edge_mor[e] = f.morphism_map[scells[z].edge_mor[e]];
      out[n][z] = dindex.at(img);
    }
  }
  return out;
}

std::vector<std::size_t> nondegenerate_counts(const TruncatedCubicalSet &k) {
  std::vector<std::size_t> counts(k.top_dim + 1);
  counts[0] = k.level_sizes[0];
  for (int n = 1; n <= k.top_dim; ++n) {
    std::vector<bool> degenerate(k.level_sizes[n], false);
    for (const auto &t : k.degen[n - 1])
      for (auto v : t) degenerate[v] = true;
    if (n - 1 >= 1)
      for (const auto &t : k.conn[n - 1])
        for (auto v : t) degenerate[v] = true;
    counts[n] = 0;
    for (std::size_t z = 0; z < k.level_sizes[n]; ++z)
      if (!degenerate[z]) ++counts[n];
  }
  return counts;
}

EulerReport reduced_euler(const TruncatedCubicalSet &k) {
  auto counts = nondegenerate_counts(k);
  long long chi = 0;
  for (int n = 0; n <= k.top_dim; ++n)
    chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[n]);
  return EulerReport{chi - 1, k.dimensionally_complete};
}

//===========================================================================
// Smash product
//===========================================================================

namespace {

int skeleton_dim(const TruncatedCubicalSet &k) {
  auto counts = nondegenerate_counts(k);
  int top = 0;
  for (int n = 0; n <= k.top_dim; ++n)
    if (counts[n] > 0) top = n;
  return top;
}

} // namespace

TruncatedCubicalSet smash_cubical(const TruncatedCubicalSet &k,
                                  const TruncatedCubicalSet &k2) {
  const int d = std::min(k.top_dim, k2.top_dim);
  TruncatedCubicalSet out;
  out.top_dim = d;
  out.level_sizes.resize(d + 1);
  out.basepoint.assign(d + 1, 0);
  out.faces.resize(d + 1);
  out.degen.resize(std::max(d, 1));
  out.conn.resize(std::max(d, 1));

  // cell 0 is the collapsed wedge; then pairs of non-base cells, row-major
  auto pair_id = [&](int n, std::size_t x, std::size_t y) -> std::size_t {
    if (x == k.basepoint[n] || y == k2.basepoint[n]) return 0;
    std::size_t rx = x < k.basepoint[n] ? x : x - 1;
    std::size_t ry = y < k2.basepoint[n] ? y : y - 1;
    return 1 + rx * (k2.level_sizes[n] - 1) + ry;
  };
  auto unpair = [&](int n, std::size_t id) -> std::pair<std::size_t, std::size_t> {
    std::size_t rx = (id - 1) / (k2.level_sizes[n] - 1);
    std::size_t ry = (id - 1) % (k2.level_sizes[n] - 1);
    std::size_t x = rx < k.basepoint[n] ? rx : rx + 1;
    std::size_t y = ry < k2.basepoint[n] ? ry : ry + 1;
    return {x, y};
  };

  for (int n = 0; n <= d; ++n)
    out.level_sizes[n] =
        1 + (k.level_sizes[n] - 1) * (k2.level_sizes[n] - 1);

  auto map_table = [&](int from, int to,
                       auto &&mapx, auto &&mapy) {
    std::vector<std::size_t> t(out.level_sizes[from]);
    t[0] = 0;
    for (std::size_t id = 1; id < out.level_sizes[from]; ++id) {
      auto [x, y] = unpair(from, id);
      t[id] = pair_id(to, mapx(x), mapy(y));
    }
    return t;
  };

  for (int n = 1; n <= d; ++n)
    for (int a = 0; a < 2; ++a) {
      out.faces[n][a].resize(n);
      for (int i = 1; i <= n; ++i)
        out.faces[n][a][i - 1] = map_table(
            n, n - 1,
            [&](std::size_t x) { return k.face(n, a, i, x); },
            [&](std::size_t y) { return k2.face(n, a, i, y); });
    }
  for (int n = 0; n < d; ++n) {
    out.degen[n].resize(n + 1);
    for (int i = 1; i <= n + 1; ++i)
      out.degen[n][i - 1] = map_table(
          n, n + 1,
          [&](std::size_t x) { return k.degeneracy(n, i, x); },
          [&](std::size_t y) { return k2.degeneracy(n, i, y); });
    if (n >= 1) {
      out.conn[n].resize(n);
      for (int i = 1; i <= n; ++i)
        out.conn[n][i - 1] = map_table(
            n, n + 1,
            [&](std::size_t x) { return k.connection(n, i, x); },
            [&](std::size_t y) { return k2.connection(n, i, y); });
    }
  }

  // cell counting stays truncation-independent only when one factor is
  // concentrated in dimension zero
  out.dimensionally_complete = k.dimensionally_complete &&
                               k2.dimensionally_complete &&
                               (skeleton_dim(k) == 0 || skeleton_dim(k2) == 0);
  validate_cubical(out);
  return out;
}

ProbCubicalSet make_prob_cubical(std::vector<ProbCubicalTerm> terms) {
  if (terms.empty()) fail("ShapeMismatch", "combination has no terms");
  Rational total = 0;
  for (const auto &t : terms) {
    if (t.weight < 0) fail("NegativeEntry", "negative weight");
    validate_cubical(t.set);
    total += t.weight;
  }
  if (total != 1)
    fail("WeightSum", "weights sum to " + rat_str(total) + ", expected 1");
  return ProbCubicalSet{std::move(terms)};
}

ProbCubicalSet smash_prob_cubical(const ProbCubicalSet &a,
                                  const ProbCubicalSet &b) {
  std::vector<ProbCubicalTerm> terms;
  for (const auto &x : a.terms)
    for (const auto &y : b.terms)
      terms.push_back(
          ProbCubicalTerm{x.weight * y.weight, smash_cubical(x.set, y.set)});
  return make_prob_cubical(std::move(terms));
}

//===========================================================================
// Subcomplexes
//===========================================================================

void validate_subcomplex(const TruncatedCubicalSet &k, const SubComplex &a) {
  if (a.member.size() != std::size_t(k.top_dim + 1))
    fail("ShapeMismatch", "subcomplex has wrong number of levels");
  for (int n = 0; n <= k.top_dim; ++n)
    if (a.member[n].size() != k.level_sizes[n])
      fail("ShapeMismatch", "subcomplex level " + std::to_string(n) +
                                " has wrong size");
  for (int n = 0; n <= k.top_dim; ++n)
    if (!a.member[n][k.basepoint[n]])
      fail("ShapeMismatch", "subcomplex must contain the basepoint");
  auto gens = all_generators(k);
  for (const auto &g : gens)
    for (std::size_t z = 0; z < k.level_sizes[g.from_level]; ++z)
      if (a.member[g.from_level][z] && !a.member[g.to_level][(*g.table)[z]])
        fail("ShapeMismatch",
             "subcomplex not closed under " + g.name);
}

SubComplex sub_union(const SubComplex &a, const SubComplex &b) {
  SubComplex out = a;
  for (std::size_t n = 0; n < out.member.size(); ++n)
    for (std::size_t z = 0; z < out.member[n].size(); ++z)
      out.member[n][z] = a.member[n][z] || b.member[n][z];
  return out;
}

SubComplex sub_intersection(const SubComplex &a, const SubComplex &b) {
  SubComplex out = a;
  for (std::size_t n = 0; n < out.member.size(); ++n)
    for (std::size_t z = 0; z < out.member[n].size(); ++z)
      out.member[n][z] = a.member[n][z] && b.member[n][z];
  return out;
}

long long sub_reduced_euler(const TruncatedCubicalSet &k, const SubComplex &a) {
  long long chi = 0;
  for (int n = 0; n <= k.top_dim; ++n) {
    std::vector<bool> degenerate(k.level_sizes[n], false);
    if (n >= 1) {
      for (const auto &t : k.degen[n - 1])
        for (auto v : t) degenerate[v] = true;
      if (n - 1 >= 1)
        for (const auto &t : k.conn[n - 1])
          for (auto v : t) degenerate[v] = true;
    }
    long long count = 0;
    for (std::size_t z = 0; z < k.level_sizes[n]; ++z)
      if (a.member[n][z] && !degenerate[z]) ++count;
    chi += (n % 2 == 0 ? 1 : -1) * count;
  }
  return chi - 1;
}

} // namespace gammacat::cubical
