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

#ifndef GAMMACAT_CUBICAL_HPP
#define GAMMACAT_CUBICAL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gammacat/category.hpp"
#include "gammacat/rational.hpp"

namespace gammacat::cubical {

// A pointed cubical set with connections, truncated at top_dim. Cells at
// each level are indices; the structure maps are index tables:
//   faces[n][a][i-1]  : level n -> n-1   (a in {0,1}, i in 1..n)
//   degen[n][i-1]     : level n -> n+1   (i in 1..n+1)
//   conn[n][i-1]      : level n -> n+1   (i in 1..n)
// Every level has a distinguished basepoint cell fixed by all maps.
struct TruncatedCubicalSet {
  int top_dim = 0;
  std::vector<std::size_t> level_sizes;
  std::vector<std::size_t> basepoint;
  std::vector<std::array<std::vector<std::vector<std::size_t>>, 2>> faces;
  std::vector<std::vector<std::vector<std::size_t>>> degen;
  std::vector<std::vector<std::vector<std::size_t>>> conn;
  // True when every cell above top_dim of the represented object is
  // degenerate, so nondegenerate counts (and Euler characteristics) are
  // truncation-independent.
  bool dimensionally_complete = false;

  std::size_t face(int n, int a, int i, std::size_t cell) const {
    return faces[n][a][i - 1][cell];
  }
  std::size_t degeneracy(int n, int i, std::size_t cell) const {
    return degen[n][i - 1][cell];
  }
  std::size_t connection(int n, int i, std::size_t cell) const {
    return conn[n][i - 1][cell];
  }
};

// Checks table shapes, the full set of cubical relations (all coincidences
// of depth-two composites of faces, degeneracies and connections, derived
// symbolically from the interval maps t -> (..a..), drop t_i and
// max(t_i, t_i+1)), and that basepoints are fixed. Throws
// RelationViolated(relation, cell) / ShapeMismatch.
void validate_cubical(const TruncatedCubicalSet &k);

// Formal degeneracies of a finite pointed set: K_n = S for all n.
TruncatedCubicalSet discrete_pointed(std::size_t size, std::size_t base,
                                     int top_dim);

// One 0-cell, one nondegenerate 1-cell with both faces at the basepoint,
// all higher cells formal degeneracies. Truncated at dimension 2.
TruncatedCubicalSet circle_model();

// Cubical nerve of a finite category: level-n cells are functors from the
// n-cube (vertices {0,1}^n, edge-generated, commuting squares) to C.
// Basepoint: the constant functor at C.basepoint_object. Throws
// ExplosionGuard when the projected candidate count exceeds the bound.
TruncatedCubicalSet cubical_nerve(const category::FiniteCategorySpec &c,
                                  int n_max,
                                  std::uint64_t explosion_bound = 1000000);

// A functor of finite categories induces a levelwise map of nerves
// commuting with all structure maps; returns the per-level cell tables.
std::vector<std::vector<std::size_t>> nerve_map(
    const category::FiniteCategorySpec &src,
    const category::FiniteCategorySpec &dst, const category::FunctorSpec &f,
    const TruncatedCubicalSet &nerve_src, const TruncatedCubicalSet &nerve_dst);

// A cell is degenerate iff it is the image of a degeneracy or connection.
std::vector<std::size_t> nondegenerate_counts(const TruncatedCubicalSet &k);

struct EulerReport {
  long long chi_reduced = 0; // alternating nondegenerate count minus one
  bool exact = false;        // false when the value is truncation-dependent
};
EulerReport reduced_euler(const TruncatedCubicalSet &k);

// Levelwise smash product (presheaf product collapsed along the wedge).
TruncatedCubicalSet smash_cubical(const TruncatedCubicalSet &k,
                                  const TruncatedCubicalSet &k2);

// Convex combinations of pointed cubical sets.
struct ProbCubicalTerm {
  Rational weight;
  TruncatedCubicalSet set;
};
struct ProbCubicalSet {
  std::vector<ProbCubicalTerm> terms;
};
ProbCubicalSet make_prob_cubical(std::vector<ProbCubicalTerm> terms);
// Bilinear smash with product weights.
ProbCubicalSet smash_prob_cubical(const ProbCubicalSet &a,
                                  const ProbCubicalSet &b);

// Levelwise cell subsets closed under every structure map.
struct SubComplex {
  std::vector<std::vector<bool>> member; // per level
};
void validate_subcomplex(const TruncatedCubicalSet &k, const SubComplex &a);
SubComplex sub_union(const SubComplex &a, const SubComplex &b);
SubComplex sub_intersection(const SubComplex &a, const SubComplex &b);
// Degeneracy status is inherited from the ambient set (faces retract
// degeneracies), so counting restricts cleanly to subcomplexes.
long long sub_reduced_euler(const TruncatedCubicalSet &k, const SubComplex &a);

} // namespace gammacat::cubical

#endif
