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

#include <doctest.h>

#include "gammacat/cubical.hpp"
#include "gammacat/generators.hpp"
#include "gammacat/json_io.hpp"

using namespace gammacat;
using namespace gammacat::cubical;

TEST_CASE("discrete pointed sets validate and count points") {
  auto k = discrete_pointed(4, 0, 3);
  CHECK_NOTHROW(validate_cubical(k));
  auto counts = nondegenerate_counts(k);
  CHECK(counts[0] == 4);
  CHECK(counts[1] == 0);
  auto euler = reduced_euler(k);
  CHECK(euler.chi_reduced == 3);
  CHECK(euler.exact);
}

TEST_CASE("the standard cube objects pass validation") {
  // nerve of the n-cube poset: the combinatorial n-cube with connections
  auto interval = cubical_nerve(category::cube_poset_category(1), 2);
  CHECK(interval.level_sizes[0] == 2);
  CHECK(interval.level_sizes[1] == 3);
  auto square = cubical_nerve(category::cube_poset_category(2), 2, 10000000);
  CHECK(square.level_sizes[0] == 4);
  // 12 monotone edge paths: 4 identities + 8 strict inequalities... the
  // count is the number of pairs v <= w reachable along one edge direction
  CHECK_NOTHROW(validate_cubical(square));
}

TEST_CASE("a swapped face table violates the relations") {
  auto k = circle_model();
  // swap the two delta^0 faces of one 2-cell
  std::swap(k.faces[2][0][0][1], k.faces[2][0][1][1]);
  std::string kind;
  try {
    validate_cubical(k);
  } catch (const Error &e) {
    kind = e.kind();
  }
  CHECK(kind == "RelationViolated");
}

TEST_CASE("circle model has one nondegenerate cell in dimensions 0 and 1") {
  auto k = circle_model();
  auto counts = nondegenerate_counts(k);
  CHECK(counts == std::vector<std::size_t>{1, 1, 0});
  auto euler = reduced_euler(k);
  CHECK(euler.chi_reduced == -1);
  CHECK(euler.exact);
}

TEST_CASE("nerve of the one-object one-morphism category is a point") {
  auto k = cubical_nerve(category::discrete_category(1), 2);
  CHECK(k.level_sizes == std::vector<std::size_t>{1, 1, 1});
  auto euler = reduced_euler(k);
  CHECK(euler.chi_reduced == 0);
  CHECK(euler.exact);
}

TEST_CASE("nerve of the discrete two-object category") {
  auto k = cubical_nerve(category::discrete_category(2), 2);
  CHECK(k.level_sizes == std::vector<std::size_t>{2, 2, 2});
  auto counts = nondegenerate_counts(k);
  CHECK(counts[0] == 2);
  CHECK(counts[1] == 0);
  CHECK(reduced_euler(k).chi_reduced == 1);
}

TEST_CASE("nerve of Z/2 reproduces the reference level sizes") {
  auto c = category::cyclic_group_category(2);
  auto k = cubical_nerve(c, 2);
  CHECK(k.level_sizes == std::vector<std::size_t>{1, 2, 8});
  CHECK_FALSE(reduced_euler(k).exact);

  // independent recount of the squares: solutions of t o l = r o b
  std::size_t squares = 0;
  for (std::size_t l = 0; l < 2; ++l)
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t t = 0; t < 2; ++t)
        for (std::size_t b = 0; b < 2; ++b)
          if (c.compose(t, l) == c.compose(r, b)) ++squares;
  CHECK(squares == 8);
}

TEST_CASE("explosion guard rejects oversized enumerations") {
  CHECK_THROWS_WITH_AS(cubical_nerve(category::cube_poset_category(2), 3, 100),
                       doctest::Contains("enumerate"), Error);
}

TEST_CASE("nerve functoriality probe") {
  // quotient functor Z/2 -> trivial category
  auto z2 = category::cyclic_group_category(2);
  auto triv = category::discrete_category(1);
  category::FunctorSpec f{{0}, {0, 0}};
  auto nz2 = cubical_nerve(z2, 2);
  auto ntriv = cubical_nerve(triv, 2);
  auto map = nerve_map(z2, triv, f, nz2, ntriv);
  // commutes with faces and degeneracies on every cell
  for (int n = 1; n <= 2; ++n)
    for (int a = 0; a < 2; ++a)
      for (int i = 1; i <= n; ++i)
        for (std::size_t z = 0; z < nz2.level_sizes[n]; ++z)
          CHECK(map[n - 1][nz2.face(n, a, i, z)] ==
                ntriv.face(n, a, i, map[n][z]));
  for (int n = 0; n < 2; ++n)
    for (int i = 1; i <= n + 1; ++i)
      for (std::size_t z = 0; z < nz2.level_sizes[n]; ++z)
        CHECK(map[n + 1][nz2.degeneracy(n, i, z)] ==
              ntriv.degeneracy(n, i, map[n][z]));
}

TEST_CASE("smash with the two-point set is the identity") {
  auto k = circle_model();
  auto s0 = discrete_pointed(2, 0, 2);
  auto sm = smash_cubical(k, s0);
  CHECK(sm.level_sizes == k.level_sizes);
  CHECK(nondegenerate_counts(sm) == nondegenerate_counts(k));
  CHECK(reduced_euler(sm).chi_reduced == reduced_euler(k).chi_reduced);
}

TEST_CASE("smash of discrete sets multiplies reduced sizes") {
  auto a = discrete_pointed(3, 0, 2);
  auto b = discrete_pointed(4, 1, 2);
  auto sm = smash_cubical(a, b);
  CHECK(reduced_euler(sm).chi_reduced == 6);
  CHECK(reduced_euler(sm).exact);

  auto base_only = discrete_pointed(1, 0, 2);
  auto absorbed = smash_cubical(a, base_only);
  CHECK(reduced_euler(absorbed).chi_reduced == 0);
  for (auto s : absorbed.level_sizes) CHECK(s == 1);
}

TEST_CASE("euler multiplicativity on random discrete smashes") {
  gen::Rng rng(51);
  for (int t = 0; t < 40; ++t) {
    std::size_t n1 = 1 + rng.next(6), n2 = 1 + rng.next(6);
    auto a = discrete_pointed(n1, rng.next(n1), 2);
    auto b = discrete_pointed(n2, rng.next(n2), 2);
    auto sm = smash_cubical(a, b);
    CHECK(reduced_euler(sm).chi_reduced ==
          reduced_euler(a).chi_reduced * reduced_euler(b).chi_reduced);
  }
}

TEST_CASE("probabilistic cubical sets: weights multiply under smash") {
  ProbCubicalSet a = make_prob_cubical(
      {ProbCubicalTerm{Rational(1, 2), discrete_pointed(2, 0, 1)},
       ProbCubicalTerm{Rational(1, 2), discrete_pointed(3, 0, 1)}});
  ProbCubicalSet b = make_prob_cubical(
      {ProbCubicalTerm{Rational(1, 3), discrete_pointed(2, 0, 1)},
       ProbCubicalTerm{Rational(2, 3), discrete_pointed(2, 0, 1)}});
  auto sm = smash_prob_cubical(a, b);
  RationalVector w;
  for (const auto &t : sm.terms) w.push_back(t.weight);
  CHECK(w == RationalVector{Rational(1, 6), Rational(1, 3), Rational(1, 6),
                            Rational(1, 3)});
  CHECK(rat_sum(w) == 1);
}

TEST_CASE("cell complex export round-trips") {
  for (const auto &k :
       {cubical_nerve(category::discrete_category(2), 2),
        cubical_nerve(category::cyclic_group_category(2), 2), circle_model()}) {
    auto j = io::to_json(k);
    auto back = io::cubical_from_json(j);
    CHECK(io::to_json(back) == j);
  }
}
