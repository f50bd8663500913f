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

#include <functional>

#include "gammacat/finprob.hpp"
#include "gammacat/generators.hpp"

using namespace gammacat;
using namespace gammacat::finprob;

namespace {

FiniteProbability probs(std::vector<std::string> labels,
                        std::vector<std::string> values) {
  RationalVector v;
  for (const auto &s : values) v.push_back(rat_parse(s));
  return make_probability(std::move(labels), std::move(v));
}

std::string error_kind(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  return "";
}

} // namespace

TEST_CASE("validate accepts the identity and the collapse morphism") {
  auto half = probs({"a", "b"}, {"1/2", "1/2"});
  CHECK_NOTHROW(validate({{Rational(1), Rational(0)},
                          {Rational(0), Rational(1)}},
                         half, half));
  auto point = zero_object();
  auto third = probs({"a", "b"}, {"1/3", "2/3"});
  CHECK_NOTHROW(validate({{Rational(1), Rational(1)}}, third, point));
}

TEST_CASE("validate reports the first failing invariant") {
  auto half = probs({"a", "b"}, {"1/2", "1/2"});
  auto third = probs({"a", "b"}, {"1/3", "2/3"});
  RationalMatrix flat{{Rational(1, 2), Rational(1, 2)},
                      {Rational(1, 2), Rational(1, 2)}};
  CHECK(error_kind([&] { validate(flat, half, third); }) ==
        "MeasureNotPreserved");
  RationalMatrix negative{{Rational(-1, 2), Rational(1, 2)},
                          {Rational(3, 2), Rational(1, 2)}};
  CHECK(error_kind([&] { validate(negative, half, half); }) == "NegativeEntry");
  RationalMatrix short_column{{Rational(1, 2), Rational(1, 2)},
                              {Rational(1, 6), Rational(1, 2)}};
  CHECK(error_kind([&] { validate(short_column, half, half); }) ==
        "ColumnNotStochastic");
}

TEST_CASE("composition with identities and collapse morphisms") {
  gen::Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    auto p = gen::random_space(rng, 2 + rng.next(3), 12, false);
    auto s = gen::random_morphism_from(rng, p, 2 + rng.next(3), 12);
    CHECK(compose(s, identity(p)) == s);
    CHECK(compose(identity(s.target), s) == s);
    // 1^_{(Y,Q)} o S = 1^_{(X,P)}
    CHECK(compose(to_zero(s.target), s) == to_zero(p));
  }
}

TEST_CASE("target morphisms absorb composition on both sides") {
  gen::Rng rng(12);
  for (int t = 0; t < 30; ++t) {
    auto p = gen::random_space(rng, 2 + rng.next(3), 12, false);
    auto q = gen::random_space(rng, 2 + rng.next(3), 12, false, "y");
    auto qhat = target_morphism(p, q);
    CHECK_NOTHROW(validate(qhat.matrix, p, q));
    auto upstream = gen::random_morphism_into(rng, p, 2 + rng.next(3), 12);
    // Q^ o S = Q^ with the source replaced
    CHECK(compose(qhat, upstream) == target_morphism(upstream.source, q));
    auto downstream = gen::random_morphism_from(rng, q, 2 + rng.next(3), 12);
    // S' o Q^ = Q'^
    CHECK(compose(downstream, qhat) == target_morphism(p, downstream.target));
  }
}

TEST_CASE("target morphism worked examples") {
  auto point = zero_object();
  auto third = probs({"a", "b"}, {"1/3", "2/3"});
  auto qhat = target_morphism(point, third);
  CHECK(qhat.matrix == RationalMatrix{{Rational(1, 3)}, {Rational(2, 3)}});
  auto half = probs({"a", "b"}, {"1/2", "1/2"});
  auto both = target_morphism(half, third);
  CHECK(both.matrix[0] == RationalVector{Rational(1, 3), Rational(1, 3)});
  CHECK(both.matrix[1] == RationalVector{Rational(2, 3), Rational(2, 3)});
  auto wide = target_morphism(probs({"a", "b", "c"}, {"1/4", "1/4", "1/2"}),
                              point);
  CHECK(wide.matrix ==
        RationalMatrix{{Rational(1), Rational(1), Rational(1)}});
}

TEST_CASE("coproduct of objects is the independent product") {
  auto p = probs({"a", "b"}, {"1/3", "2/3"});
  auto q = probs({"c", "d"}, {"1/4", "3/4"});
  auto prod = coproduct_objects(p, q);
  CHECK(prod.probs == RationalVector{Rational(1, 12), Rational(1, 4),
                                     Rational(1, 6), Rational(1, 2)});
  CHECK(prod.labels[0] == "a|c");
  CHECK(rat_sum(prod.probs) == 1);
  CHECK(marginal_left(prod, 2).probs == p.probs);
  CHECK(marginal_right(prod, 2).probs == q.probs);

  auto unit = coproduct_objects(zero_object(), p);
  CHECK(unit.probs == p.probs);

  auto half = probs({"a", "b"}, {"1/2", "1/2"});
  CHECK(coproduct_objects(half, half).probs ==
        RationalVector(4, Rational(1, 4)));
}

TEST_CASE("copair over singleton sources uses the nonzero branch") {
  auto sigma = probs({"y0", "y1"}, {"1/2", "1/2"});
  auto s = target_morphism(zero_object("u"), sigma);
  auto s2 = target_morphism(zero_object("v"), sigma);
  auto cp = coproduct_morphisms(s, s2);
  // sigma_k^-1 * 1/2 * 1/2 = 1/2 in both rows
  CHECK(cp.copair.matrix == RationalMatrix{{Rational(1, 2)}, {Rational(1, 2)}});
  CHECK(compose(cp.copair, cp.in_left) == s);
  CHECK(compose(cp.copair, cp.in_right) == s2);
}

TEST_CASE("copair zero branch adds the two entries") {
  auto sigma = probs({"y0", "y1"}, {"1", "0"});
  RationalMatrix m{{Rational(1)}, {Rational(0)}};
  auto s = validate(m, zero_object("u"), sigma);
  auto s2 = validate(m, zero_object("v"), sigma);
  auto cp = coproduct_morphisms(s, s2);
  CHECK(cp.copair.matrix == RationalMatrix{{Rational(1)}, {Rational(0)}});
  CHECK(compose(cp.copair, cp.in_left) == s);
  CHECK(compose(cp.copair, cp.in_right) == s2);
}

TEST_CASE("copair of identities transports the product measure") {
  auto half = probs({"a", "b"}, {"1/2", "1/2"});
  auto cp = coproduct_morphisms(identity(half), identity(half));
  CHECK(cp.object.probs == RationalVector(4, Rational(1, 4)));
  CHECK(mat_vec(cp.copair.matrix, cp.object.probs) == half.probs);
  CHECK(compose(cp.copair, cp.in_left) == identity(half));
  CHECK(compose(cp.copair, cp.in_right) == identity(half));
}

TEST_CASE("desk-scale search: matrices satisfying the commuting triangles") {
  // enumerate all 2x1 matrices with denominator <= 6 and check that the
  // formula's copair is among the solutions of the two triangle identities;
  // for singleton sources the solution is unique
  auto sigma = probs({"y0", "y1"}, {"1/3", "2/3"});
  auto s = target_morphism(zero_object("u"), sigma);
  auto s2 = target_morphism(zero_object("v"), sigma);
  auto cp = coproduct_morphisms(s, s2);
  std::vector<RationalMatrix> solutions;
  for (int num0 = 0; num0 <= 6; ++num0)
    for (int num1 = 0; num1 <= 6; ++num1) {
      RationalMatrix cand{{Rational(num0, 6)}, {Rational(num1, 6)}};
      // triangles: column sums against the injections
      bool left = true, right = true;
      RationalVector lhs = mat_vec(cand, RationalVector{Rational(1)});
      left = lhs == RationalVector{s.matrix[0][0], s.matrix[1][0]};
      right = lhs == RationalVector{s2.matrix[0][0], s2.matrix[1][0]};
      if (left && right) solutions.push_back(cand);
    }
  REQUIRE(solutions.size() == 1);
  CHECK(solutions[0] == cp.copair.matrix);
}

TEST_CASE("composition is associative and unital on random triples") {
  gen::Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    auto p = gen::random_space(rng, 2 + rng.next(3), 10, false);
    auto s1 = gen::random_morphism_from(rng, p, 2 + rng.next(3), 10);
    auto s2 = gen::random_morphism_from(rng, s1.target, 2 + rng.next(3), 10);
    auto s3 = gen::random_morphism_from(rng, s2.target, 2 + rng.next(3), 10);
    CHECK(compose(s3, compose(s2, s1)) == compose(compose(s3, s2), s1));
  }
}

TEST_CASE("zero object has exactly one morphism in each direction") {
  auto q = probs({"a", "b", "c"}, {"1/6", "1/3", "1/2"});
  // from the zero object the only stochastic matrix transporting 1 to Q is
  // the column Q itself
  auto from = from_zero(q);
  CHECK(mat_vec(from.matrix, RationalVector{Rational(1)}) == q.probs);
  // to the zero object every column is forced to 1
  auto to = to_zero(q);
  for (const auto &e : to.matrix[0]) CHECK(e == 1);
  // any perturbation breaks an invariant
  RationalMatrix bad = from.matrix;
  bad[0][0] += Rational(1, 6);
  bad[1][0] -= Rational(1, 6);
  CHECK_THROWS_AS(validate(bad, zero_object(), q), Error);
}

TEST_CASE("copair identities hold on random instances including zero rows") {
  gen::Rng rng(14);
  int zero_rows_seen = 0;
  for (int t = 0; t < 200; ++t) {
    auto q = gen::random_space(rng, 2 + rng.next(3), 12, false, "y");
    auto s = gen::random_morphism_into(rng, q, 1 + rng.next(4), 12);
    auto s2 = gen::random_morphism_into(rng, q, 1 + rng.next(4), 12);
    for (const auto &w : q.probs)
      if (w == 0) {
        ++zero_rows_seen;
        break;
      }
    auto cp = coproduct_morphisms(s, s2);
    CHECK(compose(cp.copair, cp.in_left) == s);
    CHECK(compose(cp.copair, cp.in_right) == s2);
    CHECK(mat_vec(cp.copair.matrix, cp.object.probs) == q.probs);
  }
  CHECK(zero_rows_seen > 10);
}
