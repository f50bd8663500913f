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

#ifndef GAMMACAT_PROBCAT_HPP
#define GAMMACAT_PROBCAT_HPP

#include <vector>

#include "gammacat/finprob.hpp"
#include "gammacat/pointed.hpp"
#include "gammacat/rational.hpp"

namespace gammacat::probcat {

using pointed::PointedMap;
using pointed::PointedSet;

// A formal convex combination of pointed sets.
struct ProbTerm {
  Rational weight;
  PointedSet set;

  bool operator==(const ProbTerm &o) const {
    return weight == o.weight && set == o.set;
  }
  bool operator<(const ProbTerm &o) const {
    if (set != o.set) return set < o.set;
    return weight < o.weight;
  }
};

struct ProbPointedSet {
  std::vector<ProbTerm> terms;

  std::size_t term_count() const { return terms.size(); }
  bool operator==(const ProbPointedSet &) const = default;
};

ProbPointedSet make_prob_pointed_set(std::vector<ProbTerm> terms);
ProbPointedSet zero_ps();

// Weight vector of the combination, as a finite probability on term indices.
finprob::FiniteProbability weight_space(const ProbPointedSet &x);

struct WeightedMap {
  PointedMap map;
  Rational weight;
};

// A morphism of PS*: a stochastic matrix on the weight vectors plus, for
// every (target term j, source term i), a family of pointed maps whose
// weights sum exactly to stoch[j][i].
struct ProbMorphism {
  ProbPointedSet source;
  ProbPointedSet target;
  RationalMatrix stoch;                                // (#target x #source)
  std::vector<std::vector<std::vector<WeightedMap>>> families; // [j][i]
};

// Checked constructor; verifies the weight-sum invariant, endpoints of every
// family map, stochasticity of stoch and the transport stoch * weights(source)
// = weights(target). Raises Mismatch / EmptyFamily / WeightSum.
ProbMorphism make_prob_morphism(
    ProbPointedSet source, ProbPointedSet target, RationalMatrix stoch,
    std::vector<std::vector<std::vector<WeightedMap>>> families);

ProbMorphism identity_prob(const ProbPointedSet &x);

// Merge duplicate maps, drop zero-weight entries, order families
// deterministically. Equality of morphisms is defined on canonical forms.
ProbMorphism canonicalize(const ProbMorphism &phi);
bool prob_equal(const ProbMorphism &a, const ProbMorphism &b);

// second o first with the product bookkeeping of the wreath composition.
ProbMorphism compose_prob(const ProbMorphism &second,
                          const ProbMorphism &first);

struct PsCoproduct {
  ProbPointedSet object; // terms (i,j) row-major, weight l_i l'_j, set X_i v X'_j
  ProbMorphism in_left;
  ProbMorphism in_right;
};

PsCoproduct coproduct_ps(const ProbPointedSet &x, const ProbPointedSet &y);

// The copair [phi, phi'] : X || X' -> Sigma Y of morphisms with equal target.
// Stochastic part follows the two-branch coproduct formula; families are the
// wedge maps f v f' with weights mu nu / sigma_k when sigma_k != 0 and
// mu/M + nu/N when sigma_k = 0 (M, N the two family sizes at that slot).
ProbMorphism copair_ps(const ProbMorphism &phi, const ProbMorphism &phi2);

// Unique morphisms through the zero object.
ProbMorphism to_zero_ps(const ProbPointedSet &x);
ProbMorphism from_zero_ps(const ProbPointedSet &x);

// FP -> PS* embedding on singleton pointed sets, and the forgetful functor.
ProbPointedSet embed_fp(const finprob::FiniteProbability &p);
ProbMorphism embed_fp_morphism(const finprob::StochasticMorphism &s);
finprob::FiniteProbability forget(const ProbPointedSet &x);
finprob::StochasticMorphism forget_morphism(const ProbMorphism &phi);

// Termwise smash with product weights.
ProbPointedSet smash_ps(const ProbPointedSet &x, const ProbPointedSet &y);

// Canonical object comparison up to term reindexing: sorted term multisets.
bool same_up_to_reindexing(const ProbPointedSet &a, const ProbPointedSet &b);

// Comparison up to reindexing and termwise isomorphism of pointed sets
// (pointed sets of equal size are isomorphic; the basepoint index is
// representation, not structure). Weights still compare exactly.
bool iso_reindexed_equal(const ProbPointedSet &a, const ProbPointedSet &b);

} // namespace gammacat::probcat

#endif
