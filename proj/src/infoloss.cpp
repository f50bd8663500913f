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

#include "gammacat/infoloss.hpp"

#include <cmath>
#include <limits>

#include "gammacat/generators.hpp"

namespace gammacat::infoloss {

double shannon(const RationalVector &probs) {
  double h = 0.0;
  for (const auto &p : probs) {
    if (p == 0) continue;
    double x = rat_double(p);
    h -= x * std::log(x);
  }
  return h;
}

double shannon(const finprob::FiniteProbability &p) { return shannon(p.probs); }

double kl(const finprob::FiniteProbability &p,
          const finprob::FiniteProbability &q) {
  if (p.labels != q.labels)
    fail("LabelMismatch", "KL divergence needs a common label set");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.probs[i] == 0) continue;
    if (q.probs[i] == 0) return std::numeric_limits<double>::infinity();
    double pi = rat_double(p.probs[i]);
    double qi = rat_double(q.probs[i]);
    sum -= pi * std::log(qi / pi);
  }
  return sum;
}

double loss_fp(const finprob::StochasticMorphism &s, double c) {
  return c * (shannon(s.target) - shannon(s.source));
}

InvariantFamily InvariantFamily::linear(double kappa) {
  InvariantFamily f;
  f.kind = Kind::Linear;
  f.kappa = kappa;
  return f;
}

InvariantFamily InvariantFamily::multiplicative(
    std::map<std::uint64_t, double> primes) {
  InvariantFamily f;
  f.kind = Kind::MultiplicativeSemigroup;
  f.prime_values = std::move(primes);
  return f;
}

InvariantFamily InvariantFamily::log_semigroup(
    double kappa, std::map<std::uint64_t, double> primes) {
  InvariantFamily f;
  f.kind = Kind::LogSemigroup;
  f.kappa = kappa;
  f.prime_values = std::move(primes);
  return f;
}

InvariantFamily InvariantFamily::exponential(double lambda) {
  InvariantFamily f;
  f.kind = Kind::Exponential;
  f.lambda = lambda;
  return f;
}

InvariantFamily InvariantFamily::reduced_euler() {
  InvariantFamily f;
  f.kind = Kind::ReducedEuler;
  return f;
}

namespace {

double semigroup_value(const std::map<std::uint64_t, double> &primes,
                       std::uint64_t n) {
  // multiplicative extension over the prime factorization; rho(1) = 1
  double v = 1.0;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p)
    while (rest % p == 0) {
      auto it = primes.find(p);
      if (it == primes.end())
        fail("UndefinedInvariant",
             "no generator value for prime " + std::to_string(p));
      v *= it->second;
      rest /= p;
    }
  if (rest > 1) {
    auto it = primes.find(rest);
    if (it == primes.end())
      fail("UndefinedInvariant",
           "no generator value for prime " + std::to_string(rest));
    v *= it->second;
  }
  return v;
}

} // namespace

double invariant_value(const InvariantFamily &fam, std::uint64_t n) {
  switch (fam.kind) {
    case InvariantFamily::Kind::Linear:
      return fam.kappa * double(n);
    case InvariantFamily::Kind::MultiplicativeSemigroup:
      if (n == 0)
        fail("UndefinedInvariant", "multiplicative semigroup needs N >= 1");
      return semigroup_value(fam.prime_values, n);
    case InvariantFamily::Kind::LogSemigroup:
      if (n == 0)
        fail("UndefinedInvariant", "log semigroup needs N >= 1");
      return fam.kappa * std::log(semigroup_value(fam.prime_values, n));
    case InvariantFamily::Kind::Exponential:
      if (fam.lambda <= 0)
        fail("UndefinedInvariant", "exponential family needs lambda > 0");
      return std::pow(fam.lambda, double(n));
    case InvariantFamily::Kind::ReducedEuler:
      return double(n);
  }
  fail("UndefinedInvariant", "unknown family kind");
}

double invariant_eval(const InvariantFamily &fam,
                      const probcat::PointedSet &x) {
  return invariant_value(fam, pointed::reduced_size(x));
}

double invariant_eval(const InvariantFamily &fam,
                      const cubical::TruncatedCubicalSet &k) {
  auto rep = cubical::reduced_euler(k);
  if (fam.kind == InvariantFamily::Kind::ReducedEuler)
    return double(rep.chi_reduced);
  if (rep.chi_reduced < 0)
    fail("UndefinedInvariant",
         "family undefined on negative reduced Euler characteristic");
  return invariant_value(fam, std::uint64_t(rep.chi_reduced));
}

double extensive_value(const probcat::ProbPointedSet &x,
                       const InvariantFamily &base, double kappa) {
  RationalVector weights;
  for (const auto &t : x.terms) weights.push_back(t.weight);
  double v = kappa * shannon(weights);
  for (const auto &t : x.terms)
    v += rat_double(t.weight) * invariant_eval(base, t.set);
  return v;
}

double loss_pc(const probcat::ProbMorphism &phi, const InvariantFamily &base,
               double kappa) {
  return extensive_value(phi.target, base, kappa) -
         extensive_value(phi.source, base, kappa);
}

double loss_logchi(const cubical::TruncatedCubicalSet &k,
                   const cubical::TruncatedCubicalSet &k2) {
  auto a = cubical::reduced_euler(k);
  auto b = cubical::reduced_euler(k2);
  if (a.chi_reduced <= 0 || b.chi_reduced <= 0)
    fail("NonpositiveEuler",
         "log chi~ undefined: chi~ values are " +
             std::to_string(a.chi_reduced) + " and " +
             std::to_string(b.chi_reduced));
  return std::log(double(b.chi_reduced)) - std::log(double(a.chi_reduced));
}

double LossFunctional::operator()(const finprob::StochasticMorphism &s) const {
  double hq = shannon(s.target), hp = shannon(s.source);
  switch (kind) {
    case Kind::ShannonDifference:
      return scale * (hq - hp);
    case Kind::ShannonSquaredDifference:
      return scale * (hq * hq - hp * hp);
  }
  return 0.0;
}

//===========================================================================
// Axiom suite
//===========================================================================

namespace {

using finprob::FiniteProbability;
using finprob::StochasticMorphism;

// H(1^_(lambda,1-lambda)): loss of the unique morphism from the two-point
// space with weights (lambda, 1-lambda) to the zero object.
double binary_collapse_loss(const LossFunctional &loss, const Rational &lam) {
  FiniteProbability two =
      finprob::make_probability({"a", "b"}, {lam, Rational(1 - lam)});
  return loss(finprob::to_zero(two));
}

// glue the columns of two morphisms over a split source label set
StochasticMorphism glue_disjoint_sources(const StochasticMorphism &left,
                                         const StochasticMorphism &right,
                                         const Rational &lam,
                                         const FiniteProbability &target) {
  FiniteProbability src;
  for (std::size_t i = 0; i < left.source.size(); ++i) {
    src.labels.push_back("L." + left.source.labels[i]);
    src.probs.push_back(lam * left.source.probs[i]);
  }
  for (std::size_t i = 0; i < right.source.size(); ++i) {
    src.labels.push_back("R." + right.source.labels[i]);
    src.probs.push_back((1 - lam) * right.source.probs[i]);
  }
  RationalMatrix m(target.size(), RationalVector(src.size()));
  for (std::size_t r = 0; r < target.size(); ++r) {
    for (std::size_t c = 0; c < left.source.size(); ++c)
      m[r][c] = left.matrix[r][c];
    for (std::size_t c = 0; c < right.source.size(); ++c)
      m[r][left.source.size() + c] = right.matrix[r][c];
  }
  return finprob::validate(m, src, target);
}

// pad a morphism's target from a support block to the full label set
StochasticMorphism pad_target(const StochasticMorphism &s,
                              const FiniteProbability &big,
                              std::size_t offset) {
  RationalMatrix m(big.size(), RationalVector(s.source.size(), Rational(0)));
  for (std::size_t r = 0; r < s.target.size(); ++r)
    for (std::size_t c = 0; c < s.source.size(); ++c)
      m[offset + r][c] = s.matrix[r][c];
  return finprob::validate(m, s.source, big);
}

struct Tracker {
  double max_residual = 0.0;
  std::size_t instances = 0;

  void add(double residual) {
    max_residual = std::max(max_residual, std::abs(residual));
    ++instances;
  }
};

} // namespace

std::vector<AxiomResult> axiom_suite(const LossFunctional &loss,
                                     std::size_t instances,
                                     std::uint64_t seed, double tolerance) {
  gen::Rng rng(seed);
  Tracker iso, comp, comb, coprod, mix_src, mix_tgt, mix_both;
  const std::uint64_t max_den = 12;

  for (std::size_t t = 0; t < instances; ++t) {
    std::size_t nx = 2 + rng.next(3);
    std::size_t ny = 2 + rng.next(3);

    // vanishing on isomorphisms
    {
      auto p = gen::random_space(rng, nx, max_den, false);
      iso.add(loss(gen::random_isomorphism(rng, p)));
    }

    // additivity under composition
    {
      auto p = gen::random_space(rng, nx, max_den, false);
      auto s1 = gen::random_morphism_from(rng, p, ny, max_den);
      auto s2 = gen::random_morphism_from(rng, s1.target, 2 + rng.next(3),
                                          max_den);
      comp.add(loss(finprob::compose(s2, s1)) - loss(s2) - loss(s1));
    }

    // convex combination on the weighted disjoint union
    {
      auto q = gen::random_space(rng, ny, max_den, false, "y");
      auto s = gen::random_morphism_into(rng, q, nx, max_den);
      auto s2 = gen::random_morphism_into(rng, q, 2 + rng.next(3), max_den);
      Rational lam = rng.rational01(max_den);
      double lhs = loss(finprob::direct_sum(lam, s, s2));
      double rhs = rat_double(lam) * loss(s) +
                   (1.0 - rat_double(lam)) * loss(s2) +
                   binary_collapse_loss(loss, lam);
      comb.add(lhs - rhs);
    }

    // inclusion-exclusion on the coproduct
    {
      auto q = gen::random_space(rng, ny, max_den, false, "y");
      auto s = gen::random_morphism_into(rng, q, nx, max_den);
      auto s2 = gen::random_morphism_into(rng, q, 2 + rng.next(3), max_den);
      auto cp = finprob::coproduct_morphisms(s, s2);
      double lhs = loss(cp.copair);
      double rhs = loss(s) + loss(s2) - loss(finprob::from_zero(q));
      coprod.add(lhs - rhs);
    }

    // mixture variants on disjoint-support amalgamations
    {
      Rational lam = rng.rational01(max_den);
      auto q = gen::random_space(rng, ny, max_den, true, "y");
      // shared target, sources on disjoint halves of one label set
      auto s = gen::random_morphism_into(rng, q, nx, max_den);
      auto s2 = gen::random_morphism_into(rng, q, nx, max_den);
      auto glued = glue_disjoint_sources(s, s2, lam, q);
      double lhs = loss(glued);
      double rhs = rat_double(lam) * loss(s) +
                   (1.0 - rat_double(lam)) * loss(s2) +
                   binary_collapse_loss(loss, lam);
      mix_src.add(lhs - rhs);

      // shared source, targets with disjoint supports inside one label set
      auto p = gen::random_space(rng, nx, max_den, false);
      auto t1 = gen::random_morphism_from(rng, p, ny, max_den);
      auto t2 = gen::random_morphism_from(rng, p, ny, max_den);
      FiniteProbability big;
      for (std::size_t i = 0; i < ny; ++i) {
        big.labels.push_back("u" + std::to_string(i));
        big.probs.push_back(lam * t1.target.probs[i]);
      }
      for (std::size_t i = 0; i < ny; ++i) {
        big.labels.push_back("v" + std::to_string(i));
        big.probs.push_back((1 - lam) * t2.target.probs[i]);
      }
      FiniteProbability big1 = big, big2 = big;
      // endpoints for the padded halves: Q on the first block, Q' second
      for (std::size_t i = 0; i < ny; ++i) {
        big1.probs[i] = t1.target.probs[i];
        big1.probs[ny + i] = 0;
        big2.probs[i] = 0;
        big2.probs[ny + i] = t2.target.probs[i];
      }
      auto padded1 = pad_target(t1, big1, 0);
      auto padded2 = pad_target(t2, big2, ny);
      auto mixed = finprob::mixture(lam, padded1, padded2, p, big);
      double lhs2 = loss(mixed);
      double rhs2 = rat_double(lam) * loss(padded1) +
                    (1.0 - rat_double(lam)) * loss(padded2) -
                    binary_collapse_loss(loss, lam);
      mix_tgt.add(lhs2 - rhs2);

      // both ends combined: no collapse term
      auto u1 = gen::random_morphism_from(rng, s.source, ny, max_den);
      auto u2 = gen::random_morphism_from(rng, s2.source, ny, max_den);
      FiniteProbability bigt;
      for (std::size_t i = 0; i < ny; ++i) {
        bigt.labels.push_back("u" + std::to_string(i));
        bigt.probs.push_back(lam * u1.target.probs[i]);
      }
      for (std::size_t i = 0; i < ny; ++i) {
        bigt.labels.push_back("v" + std::to_string(i));
        bigt.probs.push_back((1 - lam) * u2.target.probs[i]);
      }
      FiniteProbability bt1 = bigt, bt2 = bigt;
      for (std::size_t i = 0; i < ny; ++i) {
        bt1.probs[i] = u1.target.probs[i];
        bt1.probs[ny + i] = 0;
        bt2.probs[i] = 0;
        bt2.probs[ny + i] = u2.target.probs[i];
      }
      auto q1 = pad_target(u1, bt1, 0);
      auto q2 = pad_target(u2, bt2, ny);
      auto glued_both = glue_disjoint_sources(q1, q2, lam, bigt);
      // glue needs a single target: q1, q2 both live in bigt after scaling
      double lhs3 = loss(glued_both);
      double rhs3 = rat_double(lam) * loss(q1) +
                    (1.0 - rat_double(lam)) * loss(q2);
      mix_both.add(lhs3 - rhs3);
    }
  }

  auto result = [&](const std::string &name, const Tracker &t) {
    return AxiomResult{name, t.instances, t.max_residual,
                       t.max_residual < tolerance};
  };
  return {result("isomorphism", iso),
          result("compose", comp),
          result("combine", comb),
          result("coproduct-inclusion-exclusion", coprod),
          result("mixture-shared-target", mix_src),
          result("mixture-shared-source", mix_tgt),
          result("mixture-both", mix_both)};
}

} // namespace gammacat::infoloss
