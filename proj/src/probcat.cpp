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

#include "gammacat/probcat.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace gammacat::probcat {

namespace {

std::string slot(std::size_t j, std::size_t i) {
  return "(" + std::to_string(j) + "," + std::to_string(i) + ")";
}

} // namespace

ProbPointedSet make_prob_pointed_set(std::vector<ProbTerm> terms) {
  if (terms.empty()) fail("ShapeMismatch", "combination has no terms");
  Rational total = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].weight < 0)
      fail("NegativeEntry", "term " + std::to_string(i) + " has negative weight");
    pointed::make_pointed_set(terms[i].set.size, terms[i].set.base);
    total += terms[i].weight;
  }
  if (total != 1)
    fail("WeightSum", "term weights sum to " + rat_str(total) + ", expected 1");
  return ProbPointedSet{std::move(terms)};
}

ProbPointedSet zero_ps() {
  return ProbPointedSet{{ProbTerm{Rational(1), PointedSet{1, 0}}}};
}

finprob::FiniteProbability weight_space(const ProbPointedSet &x) {
  finprob::FiniteProbability p;
  for (std::size_t i = 0; i < x.terms.size(); ++i) {
    p.labels.push_back(std::to_string(i));
    p.probs.push_back(x.terms[i].weight);
  }
  return p;
}

ProbMorphism make_prob_morphism(
    ProbPointedSet source, ProbPointedSet target, RationalMatrix stoch,
    std::vector<std::vector<std::vector<WeightedMap>>> families) {
  const std::size_t rows = target.term_count();
  const std::size_t cols = source.term_count();
  if (stoch.size() != rows || families.size() != rows)
    fail("Mismatch", "stochastic matrix / family grid has wrong height");
  for (std::size_t j = 0; j < rows; ++j) {
    if (stoch[j].size() != cols || families[j].size() != cols)
      fail("Mismatch", "row " + std::to_string(j) + " has wrong width");
    for (std::size_t i = 0; i < cols; ++i) {
      Rational total = 0;
      for (const auto &wm : families[j][i]) {
        if (wm.weight < 0)
          fail("NegativeEntry", "family weight at " + slot(j, i) + " negative");
        if (wm.map.source != source.terms[i].set ||
            wm.map.target != target.terms[j].set)
          fail("Mismatch", "family map endpoints wrong at " + slot(j, i));
        total += wm.weight;
      }
      if (total != stoch[j][i])
        fail("WeightSum", "family at " + slot(j, i) + " sums to " +
                              rat_str(total) + ", stoch entry is " +
                              rat_str(stoch[j][i]));
      if (stoch[j][i] > 0 && families[j][i].empty())
        fail("EmptyFamily", "family at " + slot(j, i) +
                                " empty despite positive stochastic entry");
    }
  }
  // transport of the weight vectors
  RationalVector image = mat_vec(stoch, weight_space(source).probs);
  for (std::size_t j = 0; j < rows; ++j)
    if (image[j] != target.terms[j].weight)
      fail("Mismatch", "stoch does not transport weights at term " +
                           std::to_string(j));
  return ProbMorphism{std::move(source), std::move(target), std::move(stoch),
                      std::move(families)};
}

ProbMorphism identity_prob(const ProbPointedSet &x) {
  const std::size_t n = x.term_count();
  RationalMatrix s(n, RationalVector(n, Rational(0)));
  std::vector<std::vector<std::vector<WeightedMap>>> fam(
      n, std::vector<std::vector<WeightedMap>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    s[i][i] = 1;
    fam[i][i].push_back(
        WeightedMap{pointed::identity_map(x.terms[i].set), Rational(1)});
  }
  return ProbMorphism{x, x, std::move(s), std::move(fam)};
}

ProbMorphism canonicalize(const ProbMorphism &phi) {
  ProbMorphism out = phi;
  for (auto &row : out.families)
    for (auto &family : row) {
      std::map<std::vector<std::size_t>, WeightedMap> merged;
      for (const auto &wm : family) {
        if (wm.weight == 0) continue;
        auto it = merged.find(wm.map.table);
        if (it == merged.end())
          merged.emplace(wm.map.table, wm);
        else
          it->second.weight += wm.weight;
      }
      family.clear();
      for (auto &[tbl, wm] : merged) family.push_back(wm);
    }
  return out;
}

bool prob_equal(const ProbMorphism &a, const ProbMorphism &b) {
  if (!(a.source == b.source) || !(a.target == b.target)) return false;
  if (a.stoch != b.stoch) return false;
  ProbMorphism ca = canonicalize(a), cb = canonicalize(b);
  for (std::size_t j = 0; j < ca.families.size(); ++j)
    for (std::size_t i = 0; i < ca.families[j].size(); ++i) {
      const auto &fa = ca.families[j][i];
      const auto &fb = cb.families[j][i];
      if (fa.size() != fb.size()) return false;
      for (std::size_t k = 0; k < fa.size(); ++k)
        if (fa[k].map != fb[k].map || fa[k].weight != fb[k].weight)
          return false;
    }
  return true;
}

ProbMorphism compose_prob(const ProbMorphism &second,
                          const ProbMorphism &first) {
  if (!(first.target == second.source))
    fail("Mismatch", "prob morphisms are not composable termwise");
  const std::size_t rows = second.target.term_count();
  const std::size_t mid = second.source.term_count();
  const std::size_t cols = first.source.term_count();
  RationalMatrix s = mat_mul(second.stoch, first.stoch);
  std::vector<std::vector<std::vector<WeightedMap>>> fam(
      rows, std::vector<std::vector<WeightedMap>>(cols));
  for (std::size_t k = 0; k < rows; ++k)
    for (std::size_t i = 0; i < cols; ++i)
      for (std::size_t j = 0; j < mid; ++j)
        for (const auto &g : second.families[k][j])
          for (const auto &f : first.families[j][i])
            fam[k][i].push_back(WeightedMap{pointed::compose(g.map, f.map),
                                            g.weight * f.weight});
  return canonicalize(
      make_prob_morphism(first.source, second.target, std::move(s), std::move(fam)));
}

PsCoproduct coproduct_ps(const ProbPointedSet &x, const ProbPointedSet &y) {
  const std::size_t n = x.term_count(), m = y.term_count();
  ProbPointedSet object;
  std::vector<pointed::Wedge> wedges;
  wedges.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto w = pointed::wedge(x.terms[i].set, y.terms[j].set);
      object.terms.push_back(
          ProbTerm{x.terms[i].weight * y.terms[j].weight, w.object});
      wedges.push_back(std::move(w));
    }

  auto pair_index = [m](std::size_t i, std::size_t j) { return i * m + j; };

  RationalMatrix sl(n * m, RationalVector(n, Rational(0)));
  RationalMatrix sr(n * m, RationalVector(m, Rational(0)));
  std::vector<std::vector<std::vector<WeightedMap>>> fl(
      n * m, std::vector<std::vector<WeightedMap>>(n));
  std::vector<std::vector<std::vector<WeightedMap>>> fr(
      n * m, std::vector<std::vector<WeightedMap>>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto &w = wedges[pair_index(i, j)];
      sl[pair_index(i, j)][i] = y.terms[j].weight;
      fl[pair_index(i, j)][i].push_back(
          WeightedMap{w.in_left, y.terms[j].weight});
      sr[pair_index(i, j)][j] = x.terms[i].weight;
      fr[pair_index(i, j)][j].push_back(
          WeightedMap{w.in_right, x.terms[i].weight});
    }

  ProbMorphism in_left = canonicalize(
      make_prob_morphism(x, object, std::move(sl), std::move(fl)));
  ProbMorphism in_right = canonicalize(
      make_prob_morphism(y, object, std::move(sr), std::move(fr)));
  return PsCoproduct{std::move(object), std::move(in_left), std::move(in_right)};
}

ProbMorphism copair_ps(const ProbMorphism &phi, const ProbMorphism &phi2) {
  if (!(phi.target == phi2.target))
    fail("TargetMismatch", "copair requires morphisms with a common target");
  const ProbPointedSet &x = phi.source;
  const ProbPointedSet &y = phi2.source;
  const ProbPointedSet &sig = phi.target;
  PsCoproduct cp = coproduct_ps(x, y);
  const std::size_t n = x.term_count(), m = y.term_count();
  auto pair_index = [m](std::size_t i, std::size_t j) { return i * m + j; };

  RationalMatrix s(sig.term_count(), RationalVector(n * m));
  std::vector<std::vector<std::vector<WeightedMap>>> fam(
      sig.term_count(), std::vector<std::vector<WeightedMap>>(n * m));
  for (std::size_t k = 0; k < sig.term_count(); ++k) {
    const Rational &sigma_k = sig.terms[k].weight;
    const bool zero_row = sigma_k == 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Rational entry =
            zero_row ? Rational(phi.stoch[k][i] + phi2.stoch[k][j])
                     : Rational(phi.stoch[k][i] * phi2.stoch[k][j] / sigma_k);
        s[k][pair_index(i, j)] = entry;
        const auto &ff = phi.families[k][i];
        const auto &gg = phi2.families[k][j];
        if (entry > 0 && (ff.empty() || gg.empty()))
          fail("EmptyFamily",
               "no maps available at " + slot(k, pair_index(i, j)) +
                   " although the copair entry is positive");
        const auto wdg = pointed::wedge(x.terms[i].set, y.terms[j].set);
        for (const auto &f : ff)
          for (const auto &g : gg) {
            Rational w =
                zero_row ? Rational(f.weight / Rational(gg.size()) +
                                    g.weight / Rational(ff.size()))
                         : Rational(f.weight * g.weight / sigma_k);
            fam[k][pair_index(i, j)].push_back(
                WeightedMap{pointed::wedge_copair(wdg, f.map, g.map), w});
          }
      }
  }
  // Columns of the copair's stochastic part need not sum to one; the checked
  // constructor asserts the weight-sum and transport invariants, which are
  // the contract here.
  return canonicalize(
      make_prob_morphism(cp.object, sig, std::move(s), std::move(fam)));
}

ProbMorphism to_zero_ps(const ProbPointedSet &x) {
  ProbPointedSet z = zero_ps();
  RationalMatrix s(1, RationalVector(x.term_count(), Rational(1)));
  std::vector<std::vector<std::vector<WeightedMap>>> fam(
      1, std::vector<std::vector<WeightedMap>>(x.term_count()));
  for (std::size_t i = 0; i < x.term_count(); ++i)
    fam[0][i].push_back(WeightedMap{
        pointed::constant_map(x.terms[i].set, z.terms[0].set), Rational(1)});
  return ProbMorphism{x, z, std::move(s), std::move(fam)};
}

ProbMorphism from_zero_ps(const ProbPointedSet &x) {
  ProbPointedSet z = zero_ps();
  RationalMatrix s(x.term_count(), RationalVector(1));
  std::vector<std::vector<std::vector<WeightedMap>>> fam(
      x.term_count(), std::vector<std::vector<WeightedMap>>(1));
  for (std::size_t i = 0; i < x.term_count(); ++i) {
    s[i][0] = x.terms[i].weight;
    if (x.terms[i].weight > 0)
      fam[i][0].push_back(
          WeightedMap{pointed::PointedMap{z.terms[0].set, x.terms[i].set,
                                          {x.terms[i].set.base}},
                      x.terms[i].weight});
  }
  return ProbMorphism{z, x, std::move(s), std::move(fam)};
}

ProbPointedSet embed_fp(const finprob::FiniteProbability &p) {
  ProbPointedSet out;
  for (const auto &w : p.probs)
    out.terms.push_back(ProbTerm{w, PointedSet{1, 0}});
  return out;
}

ProbMorphism embed_fp_morphism(const finprob::StochasticMorphism &s) {
  ProbPointedSet src = embed_fp(s.source), tgt = embed_fp(s.target);
  std::vector<std::vector<std::vector<WeightedMap>>> fam(
      tgt.term_count(), std::vector<std::vector<WeightedMap>>(src.term_count()));
  PointedSet pt{1, 0};
  for (std::size_t j = 0; j < tgt.term_count(); ++j)
    for (std::size_t i = 0; i < src.term_count(); ++i)
      if (s.matrix[j][i] != 0)
        fam[j][i].push_back(
            WeightedMap{pointed::PointedMap{pt, pt, {0}}, s.matrix[j][i]});
  return ProbMorphism{std::move(src), std::move(tgt), s.matrix, std::move(fam)};
}

finprob::FiniteProbability forget(const ProbPointedSet &x) {
  return weight_space(x);
}

finprob::StochasticMorphism forget_morphism(const ProbMorphism &phi) {
  return finprob::StochasticMorphism{weight_space(phi.source),
                                     weight_space(phi.target), phi.stoch};
}

ProbPointedSet smash_ps(const ProbPointedSet &x, const ProbPointedSet &y) {
  ProbPointedSet out;
  for (const auto &a : x.terms)
    for (const auto &b : y.terms)
      out.terms.push_back(ProbTerm{a.weight * b.weight,
                                   pointed::smash(a.set, b.set).object});
  return out;
}

bool same_up_to_reindexing(const ProbPointedSet &a, const ProbPointedSet &b) {
  if (a.term_count() != b.term_count()) return false;
  auto sa = a.terms, sb = b.terms;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

bool iso_reindexed_equal(const ProbPointedSet &a, const ProbPointedSet &b) {
  if (a.term_count() != b.term_count()) return false;
  auto project = [](const ProbPointedSet &x) {
    std::vector<std::pair<std::size_t, Rational>> out;
    for (const auto &t : x.terms) out.emplace_back(t.set.size, t.weight);
    std::sort(out.begin(), out.end(),
              [](const auto &l, const auto &r) {
                if (l.first != r.first) return l.first < r.first;
                return l.second < r.second;
              });
    return out;
  };
  return project(a) == project(b);
}

} // namespace gammacat::probcat
