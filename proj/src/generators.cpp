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

#include "gammacat/generators.hpp"

#include <algorithm>
#include <numeric>

namespace gammacat::gen {

std::uint64_t Rng::next(std::uint64_t bound) {
  // bounds are tiny here; modulo bias is irrelevant and this keeps the
  // stream identical across standard libraries
  return bound == 0 ? 0 : engine_() % bound;
}

Rational Rng::rational01(std::uint64_t max_den) {
  std::uint64_t den = 1 + next(max_den);
  std::uint64_t num = next(den + 1);
  return Rational(num, den);
}

namespace {

// split `den` into n nonnegative integer parts
std::vector<std::uint64_t> composition(Rng &rng, std::size_t n,
                                       std::uint64_t den) {
  std::vector<std::uint64_t> cuts;
  cuts.push_back(0);
  for (std::size_t i = 0; i + 1 < n; ++i) cuts.push_back(rng.next(den + 1));
  cuts.push_back(den);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::uint64_t> parts(n);
  for (std::size_t i = 0; i < n; ++i) parts[i] = cuts[i + 1] - cuts[i];
  return parts;
}

} // namespace

RationalVector random_probs(Rng &rng, std::size_t n, std::uint64_t max_den,
                            bool strictly_positive) {
  std::uint64_t den = 1 + rng.next(max_den);
  if (strictly_positive && den < n) den = n;
  auto parts = composition(rng, n, strictly_positive ? den - n : den);
  RationalVector out(n);
  std::uint64_t total = strictly_positive ? den : den;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t c = parts[i] + (strictly_positive ? 1 : 0);
    out[i] = Rational(c, total);
  }
  return out;
}

finprob::FiniteProbability random_space(Rng &rng, std::size_t n,
                                        std::uint64_t max_den,
                                        bool strictly_positive,
                                        const std::string &prefix) {
  finprob::FiniteProbability p;
  p.probs = random_probs(rng, n, max_den, strictly_positive);
  for (std::size_t i = 0; i < n; ++i)
    p.labels.push_back(prefix + std::to_string(i));
  return p;
}

finprob::StochasticMorphism random_morphism_from(
    Rng &rng, const finprob::FiniteProbability &src, std::size_t target_size,
    std::uint64_t max_den) {
  RationalMatrix m(target_size, RationalVector(src.size()));
  for (std::size_t c = 0; c < src.size(); ++c) {
    auto col = random_probs(rng, target_size, max_den, false);
    for (std::size_t r = 0; r < target_size; ++r) m[r][c] = col[r];
  }
  finprob::FiniteProbability tgt;
  tgt.probs = mat_vec(m, src.probs);
  for (std::size_t r = 0; r < target_size; ++r)
    tgt.labels.push_back("y" + std::to_string(r));
  return finprob::validate(m, src, tgt);
}

finprob::StochasticMorphism random_morphism_into(
    Rng &rng, const finprob::FiniteProbability &target,
    std::size_t source_size, std::uint64_t max_den) {
  const std::size_t rows = target.size();
  // joint distribution with row marginal Q
  RationalMatrix joint(rows, RationalVector(source_size, Rational(0)));
  for (std::size_t r = 0; r < rows; ++r) {
    auto split = random_probs(rng, source_size, max_den, false);
    for (std::size_t c = 0; c < source_size; ++c)
      joint[r][c] = target.probs[r] * split[c];
  }
  finprob::FiniteProbability src;
  for (std::size_t c = 0; c < source_size; ++c) {
    Rational s = 0;
    for (std::size_t r = 0; r < rows; ++r) s += joint[r][c];
    src.labels.push_back("x" + std::to_string(c));
    src.probs.push_back(s);
  }
  RationalMatrix m(rows, RationalVector(source_size));
  for (std::size_t c = 0; c < source_size; ++c) {
    if (src.probs[c] == 0) {
      // free stochastic column; may place mass on zero rows of Q
      auto col = random_probs(rng, rows, max_den, false);
      for (std::size_t r = 0; r < rows; ++r) m[r][c] = col[r];
    } else {
      for (std::size_t r = 0; r < rows; ++r)
        m[r][c] = joint[r][c] / src.probs[c];
    }
  }
  return finprob::validate(m, src, target);
}

finprob::StochasticMorphism random_isomorphism(
    Rng &rng, const finprob::FiniteProbability &src) {
  std::vector<std::size_t> perm(src.size());
  std::iota(perm.begin(), perm.end(), std::size_t(0));
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[rng.next(i)]);
  finprob::FiniteProbability tgt;
  tgt.labels.resize(src.size());
  tgt.probs.resize(src.size());
  RationalMatrix m(src.size(), RationalVector(src.size(), Rational(0)));
  for (std::size_t i = 0; i < src.size(); ++i) {
    m[perm[i]][i] = 1;
    tgt.labels[perm[i]] = src.labels[i] + "'";
    tgt.probs[perm[i]] = src.probs[i];
  }
  return finprob::validate(m, src, tgt);
}

probcat::ProbPointedSet random_prob_pointed_set(Rng &rng, std::size_t terms,
                                                std::size_t max_set_size,
                                                std::uint64_t max_den,
                                                bool strictly_positive) {
  auto weights = random_probs(rng, terms, max_den, strictly_positive);
  probcat::ProbPointedSet out;
  for (std::size_t i = 0; i < terms; ++i) {
    std::size_t size = 1 + rng.next(max_set_size);
    std::size_t base = rng.next(size);
    out.terms.push_back(
        probcat::ProbTerm{weights[i], pointed::PointedSet{size, base}});
  }
  return out;
}

RationalMatrix random_coupling(Rng &rng, const RationalVector &lambda,
                               const RationalVector &sigma,
                               std::uint64_t max_den) {
  const std::size_t rows = sigma.size(), cols = lambda.size();
  RationalMatrix joint(rows, RationalVector(cols));
  for (std::size_t k = 0; k < rows; ++k)
    for (std::size_t i = 0; i < cols; ++i) joint[k][i] = sigma[k] * lambda[i];
  const std::size_t moves = 2 * rows * cols;
  for (std::size_t t = 0; t < moves; ++t) {
    std::size_t k1 = rng.next(rows), k2 = rng.next(rows);
    std::size_t i1 = rng.next(cols), i2 = rng.next(cols);
    if (k1 == k2 || i1 == i2) continue;
    Rational cap = std::min(joint[k1][i2], joint[k2][i1]);
    if (cap == 0) continue;
    Rational eps = cap * rng.rational01(max_den);
    joint[k1][i1] += eps;
    joint[k2][i2] += eps;
    joint[k1][i2] -= eps;
    joint[k2][i1] -= eps;
  }
  RationalMatrix m(rows, RationalVector(cols));
  for (std::size_t i = 0; i < cols; ++i) {
    if (lambda[i] == 0) {
      auto col = random_probs(rng, rows, max_den, false);
      for (std::size_t k = 0; k < rows; ++k) m[k][i] = col[k];
    } else {
      for (std::size_t k = 0; k < rows; ++k) m[k][i] = joint[k][i] / lambda[i];
    }
  }
  return m;
}

probcat::ProbMorphism random_prob_morphism_into(
    Rng &rng, const probcat::ProbPointedSet &source,
    const probcat::ProbPointedSet &target, std::uint64_t max_den,
    std::size_t max_family) {
  RationalMatrix m =
      random_coupling(rng, probcat::weight_space(source).probs,
                      probcat::weight_space(target).probs, max_den);
  std::vector<std::vector<std::vector<probcat::WeightedMap>>> fam(
      target.term_count(),
      std::vector<std::vector<probcat::WeightedMap>>(source.term_count()));
  for (std::size_t j = 0; j < target.term_count(); ++j)
    for (std::size_t i = 0; i < source.term_count(); ++i) {
      if (m[j][i] == 0) {
        // zero-probability placeholder map on weight-zero target rows: the
        // two-branch copair needs a populated family at every slot of a
        // zero row for its size bookkeeping
        if (target.terms[j].weight == 0)
          fam[j][i].push_back(probcat::WeightedMap{
              pointed::constant_map(source.terms[i].set, target.terms[j].set),
              Rational(0)});
        continue;
      }
      std::size_t nmaps = 1 + rng.next(max_family);
      auto split = random_probs(rng, nmaps, max_den, true);
      for (std::size_t a = 0; a < nmaps; ++a) {
        // random pointed map
        std::vector<std::size_t> table(source.terms[i].set.size);
        for (std::size_t p = 0; p < table.size(); ++p)
          table[p] = rng.next(target.terms[j].set.size);
        table[source.terms[i].set.base] = target.terms[j].set.base;
        fam[j][i].push_back(probcat::WeightedMap{
            pointed::PointedMap{source.terms[i].set, target.terms[j].set,
                                std::move(table)},
            split[a] * m[j][i]});
      }
    }
  return probcat::make_prob_morphism(source, target, m, fam);
}

} // namespace gammacat::gen
