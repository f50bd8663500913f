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

#ifndef GAMMACAT_GENERATORS_HPP
#define GAMMACAT_GENERATORS_HPP

#include <cstdint>
#include <random>

#include "gammacat/finprob.hpp"
#include "gammacat/probcat.hpp"

namespace gammacat::gen {

// Deterministic instance generators for property suites. All draws go
// through the helpers below so a seed pins the whole stream.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next(std::uint64_t bound); // uniform in [0, bound)
  Rational rational01(std::uint64_t max_den);

private:
  std::mt19937_64 engine_;
};

// Random exact probability vector: a composition of `den` parts over n
// slots, den <= max_den. Zero entries allowed unless strictly_positive.
RationalVector random_probs(Rng &rng, std::size_t n, std::uint64_t max_den,
                            bool strictly_positive);

finprob::FiniteProbability random_space(Rng &rng, std::size_t n,
                                        std::uint64_t max_den,
                                        bool strictly_positive,
                                        const std::string &prefix = "x");

// Random morphism out of src: random column-stochastic matrix, target
// computed as S * P.
finprob::StochasticMorphism random_morphism_from(
    Rng &rng, const finprob::FiniteProbability &src, std::size_t target_size,
    std::uint64_t max_den);

// Random morphism into a fixed target, built from a random joint
// distribution on (target x source) with target marginal Q. Columns over
// zero-probability source points are free stochastic columns and may hit
// zero-probability rows of Q, which is what exercises the sigma = 0 branch
// of the coproduct formulas.
finprob::StochasticMorphism random_morphism_into(
    Rng &rng, const finprob::FiniteProbability &target,
    std::size_t source_size, std::uint64_t max_den);

// Random permutation isomorphism of a shuffled copy of src.
finprob::StochasticMorphism random_isomorphism(
    Rng &rng, const finprob::FiniteProbability &src);

// Random stochastic matrix with both marginals pinned (S * lambda = sigma,
// columns summing to one): starts from the independent joint and applies
// exact mass-preserving square moves. Columns over zero-weight sources are
// free stochastic columns.
RationalMatrix random_coupling(Rng &rng, const RationalVector &lambda,
                               const RationalVector &sigma,
                               std::uint64_t max_den);

// Random probabilistic pointed set: term weights as random_probs, term sets
// of size <= max_set_size with random basepoints.
probcat::ProbPointedSet random_prob_pointed_set(Rng &rng, std::size_t terms,
                                                std::size_t max_set_size,
                                                std::uint64_t max_den,
                                                bool strictly_positive);

// Random PS* morphism into a fixed target combination; families of size
// <= max_family per slot with exact weight splits.
probcat::ProbMorphism random_prob_morphism_into(
    Rng &rng, const probcat::ProbPointedSet &source,
    const probcat::ProbPointedSet &target, std::uint64_t max_den,
    std::size_t max_family);

} // namespace gammacat::gen

#endif
