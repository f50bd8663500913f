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

#ifndef GAMMACAT_FINPROB_HPP
#define GAMMACAT_FINPROB_HPP

#include <string>
#include <vector>

#include "gammacat/rational.hpp"

namespace gammacat::finprob {

// A finite probability space: distinct opaque labels with exact rational
// weights summing to one.
struct FiniteProbability {
  std::vector<std::string> labels;
  RationalVector probs;

  std::size_t size() const { return labels.size(); }
  bool operator==(const FiniteProbability &) const = default;
};

// Checked constructor; throws NegativeEntry / WeightSum / DuplicateLabel.
FiniteProbability make_probability(std::vector<std::string> labels,
                                   RationalVector probs);

// Singleton space, the zero object of the category.
FiniteProbability zero_object(const std::string &label = "*");

// A stochastic map between finite probability spaces. matrix has shape
// (#target x #source); columns are indexed by source points.
//
// Morphisms produced by validate/compose satisfy all three defining
// properties (entries >= 0, columns sum to 1, matrix * source = target).
// Copairs built by coproduct_morphisms satisfy nonnegativity and the
// measure-transport property; their columns over some points may fail to sum
// to one, which is exactly the behaviour of the two-branch copair formula.
struct StochasticMorphism {
  FiniteProbability source;
  FiniteProbability target;
  RationalMatrix matrix;

  bool operator==(const StochasticMorphism &) const = default;
};

// Full validation of the three defining properties. Error kinds:
// NegativeEntry, ColumnNotStochastic, MeasureNotPreserved (each names the
// first offending index), ShapeMismatch.
StochasticMorphism validate(const RationalMatrix &matrix,
                            const FiniteProbability &source,
                            const FiniteProbability &target);

StochasticMorphism identity(const FiniteProbability &p);

// second o first; requires first.target == second.source exactly.
StochasticMorphism compose(const StochasticMorphism &second,
                           const StochasticMorphism &first);

// The target morphism Q^: (X,P) -> (Y,Q), every column equal to Q. Absorbs
// composition on both sides and coincides with the unique morphisms through
// the zero object when either end is a singleton.
StochasticMorphism target_morphism(const FiniteProbability &p,
                                   const FiniteProbability &q);

// Unique morphism to the zero object ("1^").
StochasticMorphism to_zero(const FiniteProbability &p);
// Unique morphism from the zero object ("Q^").
StochasticMorphism from_zero(const FiniteProbability &q);

// Coproduct of objects: the product of statistically independent spaces.
// Labels are pairs serialized as "a|b" in row-major order over (left, right).
FiniteProbability coproduct_objects(const FiniteProbability &p,
                                    const FiniteProbability &q);

struct Coproduct {
  FiniteProbability object;      // (X x X', Lambda . Lambda')
  StochasticMorphism in_left;    // I : (X,Lambda) -> object
  StochasticMorphism in_right;   // I': (X',Lambda') -> object
  StochasticMorphism copair;     // [S, S'] : object -> (Y, Sigma)
};

// Injections and the two-branch copair for morphisms sharing a target:
//   copair_{k,(a,a')} = S_{k,a} S'_{k,a'} / sigma_k   (sigma_k != 0)
//   copair_{k,(a,a')} = S_{k,a} + S'_{k,a'}           (sigma_k == 0)
// Postconditions (exact): copair o in_left == left, copair o in_right ==
// right, and copair transports Lambda.Lambda' to Sigma.
Coproduct coproduct_morphisms(const StochasticMorphism &left,
                              const StochasticMorphism &right);

// Weighted disjoint union  lambda S (+) (1-lambda) S'  of morphisms with the
// same target: source (X u X', lambda P (+) (1-lambda) P'), matrix [S | S'].
// This is the amalgamation of the convex-combination axiom, not a coproduct.
StochasticMorphism direct_sum(const Rational &lambda,
                              const StochasticMorphism &left,
                              const StochasticMorphism &right);

// Pointwise mixture lambda S + (1-lambda) S' of morphisms on shared sets;
// which ends get mixed is inferred from the given source/target.
StochasticMorphism mixture(const Rational &lambda,
                           const StochasticMorphism &left,
                           const StochasticMorphism &right,
                           const FiniteProbability &source,
                           const FiniteProbability &target);

// Marginals of a product-labelled space; inverse of coproduct_objects.
FiniteProbability marginal_left(const FiniteProbability &product,
                                std::size_t left_size);
FiniteProbability marginal_right(const FiniteProbability &product,
                                 std::size_t left_size);

} // namespace gammacat::finprob

#endif
