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

#ifndef GAMMACAT_SUMMING_HPP
#define GAMMACAT_SUMMING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gammacat/category.hpp"
#include "gammacat/catops.hpp"
#include "gammacat/cubical.hpp"
#include "gammacat/probcat.hpp"
#include "gammacat/rational.hpp"

namespace gammacat::summing {

// A summing functor P(X) -> PS* in closed form: one lambda per non-base
// point of X, the probability of keeping the shared basepoint. Pointed
// subsets of X are bitmasks over the non-base points.
struct ClassicalSummingFunctor {
  RationalVector lambda; // length N = #X - 1, entries in [0,1]

  std::size_t points() const { return lambda.size(); }
};

ClassicalSummingFunctor make_classical(RationalVector lambda);

// Product weight of the all-basepoint pattern over a subset (lambda_A).
Rational pattern_weight(const ClassicalSummingFunctor &f, std::uint32_t mask);

// Value on a pointed subset: 2^|A| terms, one per basepoint pattern, each a
// wedge of |A| two-point sets (size |A|+1); the weight of a pattern is the
// product of lambda_x / (1 - lambda_x) choices. Pattern bit r set means the
// r-th point of A keeps its own point rather than the basepoint.
probcat::ProbPointedSet classical_evaluate(const ClassicalSummingFunctor &f,
                                           std::uint32_t mask);

struct SummingTable {
  std::size_t n_points = 0;
  std::vector<probcat::ProbPointedSet> value; // indexed by subset mask
};

SummingTable classical_table(const ClassicalSummingFunctor &f);

struct SummingViolation {
  std::uint32_t left_mask = 0;
  std::uint32_t right_mask = 0;
  std::string detail;
};
struct SummingReport {
  bool pass = true;
  std::vector<SummingViolation> violations;
};

// Exact check of the summing law: value[0] is the zero object and
// value[a|b] equals the coproduct of value[a], value[b] (up to canonical
// term reindexing) for all disjoint pairs.
SummingReport verify_summing(const SummingTable &table);

// Direct image along a pointed map of base sets (the Gamma-space action):
// (f_* Phi)(A') = Phi(f^-1(A' \ *) u {*}). Point i of X is mask bit i-1;
// basepoint of both sets is index 0.
SummingTable push_forward(const SummingTable &table,
                          const pointed::PointedMap &f);

//===========================================================================
// Closed-form descriptors of nerves and realizations
//===========================================================================

struct Stratum {
  int j = 0;
  std::string stabilizer;
  std::string base_set;
};

struct RealizationDescriptor {
  enum class Kind { ClassicalCube, QuantumAnnulus, GappedTorus };
  Kind kind = Kind::ClassicalCube;
  std::size_t n = 0;         // number of non-base points
  std::vector<Stratum> strata;
  std::string ambient;       // display form of the ambient union
  // gapped-torus parameters
  double beta = 0.0, delta = 0.0;
  double interval_lo = 0.0, interval_hi = 0.0;
};

// Vertices {t_i in {z_i, 1-z_i}} of the parameter cube at Z, pattern-major:
// bit r of the row index set means coordinate r takes 1-z_r.
std::vector<RationalVector> cube_vertices(const RationalVector &z);

RealizationDescriptor classical_realization_descriptor(std::size_t n);

// One n-cell of the nerve of the classical summing-functor category: the
// pointed polytope with 2^n vertices over a point sequence, distinguished
// vertex (lambda_{x_1}, ..., lambda_{x_n}).
struct NerveCellSample {
  std::vector<RationalVector> vertices;
  RationalVector distinguished;
};
NerveCellSample classical_nerve_cell(const ClassicalSummingFunctor &f,
                                     const std::vector<std::size_t> &points);

//===========================================================================
// Generic summing functors over a zero-sum category interface
//===========================================================================

// Table of a summing functor built from singleton assignments by iterated
// binary sums (fold over set bits, largest last).
struct GenericSummingTable {
  std::size_t n_points = 0;
  std::vector<catops::ZeroSumCategory::Obj> singleton; // per point
  std::vector<catops::ZeroSumCategory::Obj> value;     // per mask
};

GenericSummingTable build_generic_table(
    catops::ZeroSumCategory &cat, std::size_t n_points,
    const std::vector<catops::ZeroSumCategory::Obj> &assignment);

// The functor's action on an inclusion of pointed subsets.
catops::ZeroSumCategory::Mor table_inclusion(catops::ZeroSumCategory &cat,
                                             const GenericSummingTable &table,
                                             std::uint32_t sub,
                                             std::uint32_t super);

// All summing functors with singleton values drawn from `candidates`.
std::vector<GenericSummingTable> enumerate_summing(
    catops::ZeroSumCategory &cat, std::size_t n_points,
    const std::vector<catops::ZeroSumCategory::Obj> &candidates,
    std::uint64_t explosion_bound = 1000000);

bool verify_generic_summing(catops::ZeroSumCategory &cat,
                            const GenericSummingTable &table);

// The category of summing functors: objects are the enumerated tables,
// morphisms the natural transformations with isomorphism components.
// Requires hom enumeration on the base category. Suitable as cubical-nerve
// input.
category::FiniteCategorySpec summing_functor_category(
    catops::ZeroSumCategory &cat,
    const std::vector<GenericSummingTable> &tables,
    std::uint64_t explosion_bound = 1000000);

// Formal convex combination of per-term nerves, weight-preserving.
struct TermNerve {
  std::size_t term = 0;
  cubical::TruncatedCubicalSet nerve;
};
cubical::ProbCubicalSet prob_gamma_eval(const probcat::ProbPointedSet &x,
                                        const std::vector<TermNerve> &nerves);

} // namespace gammacat::summing

#endif
