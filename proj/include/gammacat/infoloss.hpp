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

#ifndef GAMMACAT_INFOLOSS_HPP
#define GAMMACAT_INFOLOSS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gammacat/cubical.hpp"
#include "gammacat/finprob.hpp"
#include "gammacat/probcat.hpp"

namespace gammacat::infoloss {

// Natural logarithm throughout; the constants C / kappa absorb the base.
// 0 * log 0 = 0 by continuity.
double shannon(const RationalVector &probs);
double shannon(const finprob::FiniteProbability &p);

// Relative entropy; +infinity when supp(P) is not contained in supp(Q).
double kl(const finprob::FiniteProbability &p,
          const finprob::FiniteProbability &q);

// Information loss of a stochastic morphism: C * (H(target) - H(source)).
double loss_fp(const finprob::StochasticMorphism &s, double c = 1.0);

// Object invariants rho(N) of the reduced cardinality usable as the base
// term of an extensive loss functional.
struct InvariantFamily {
  enum class Kind {
    Linear,                  // kappa * N
    MultiplicativeSemigroup, // prime -> value, extended multiplicatively
    LogSemigroup,            // kappa * log sigma(N), sigma multiplicative
    Exponential,             // lambda ^ N
    ReducedEuler             // chi~ of the underlying object
  };
  Kind kind = Kind::Linear;
  double kappa = 1.0;
  double lambda = 2.0;
  std::map<std::uint64_t, double> prime_values; // for semigroup kinds

  static InvariantFamily linear(double kappa);
  static InvariantFamily multiplicative(std::map<std::uint64_t, double> primes);
  static InvariantFamily log_semigroup(double kappa,
                                       std::map<std::uint64_t, double> primes);
  static InvariantFamily exponential(double lambda);
  static InvariantFamily reduced_euler();
};

// rho(N) on a reduced cardinality N.
double invariant_value(const InvariantFamily &fam, std::uint64_t reduced_size);
double invariant_eval(const InvariantFamily &fam, const probcat::PointedSet &x);
// For the reduced-euler family the cubical value is chi~; other families
// apply rho to chi~ interpreted as a reduced cardinality. Errors when the
// truncated value would be reported as exact: caller must check the report.
double invariant_eval(const InvariantFamily &fam,
                      const cubical::TruncatedCubicalSet &k);

// Extensive object functional of the wreath construction:
//   H~(Lambda C) = kappa * H(Lambda) + sum_i lambda_i * H~(C_i).
double extensive_value(const probcat::ProbPointedSet &x,
                       const InvariantFamily &base, double kappa);

// Loss of a PS* morphism: H~(target) - H~(source).
double loss_pc(const probcat::ProbMorphism &phi, const InvariantFamily &base,
               double kappa);

// log chi~ loss between cubical sets; NonpositiveEuler when undefined.
double loss_logchi(const cubical::TruncatedCubicalSet &k,
                   const cubical::TruncatedCubicalSet &k2);

// Entropy difference functionals fed to the axiom suite. The
// shannon-difference functional satisfies all axioms; shannon-squared is the
// planted non-example failing the convex-combination axiom.
struct LossFunctional {
  enum class Kind { ShannonDifference, ShannonSquaredDifference };
  Kind kind = Kind::ShannonDifference;
  double scale = 1.0;

  double operator()(const finprob::StochasticMorphism &s) const;
};

struct AxiomResult {
  std::string axiom;
  std::size_t instances = 0;
  double max_residual = 0.0;
  bool pass = false;
};

// Seeded random suite checking: vanishing on isomorphisms, additivity under
// composition, the convex-combination axiom (weighted disjoint union), the
// coproduct inclusion-exclusion identity, and the three mixture variants
// (on disjoint-support instances, where the mixture is an amalgamation).
std::vector<AxiomResult> axiom_suite(const LossFunctional &loss,
                                     std::size_t instances,
                                     std::uint64_t seed,
                                     double tolerance = 1e-12);

} // namespace gammacat::infoloss

#endif
