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

#include "gammacat/finprob.hpp"

#include <set>

namespace gammacat::finprob {

FiniteProbability make_probability(std::vector<std::string> labels,
                                   RationalVector probs) {
  if (labels.size() != probs.size())
    fail("ShapeMismatch", "labels and probs have different lengths");
  if (labels.empty()) fail("ShapeMismatch", "empty probability space");
  std::set<std::string> seen;
  for (const auto &l : labels)
    if (!seen.insert(l).second)
      fail("DuplicateLabel", "label '" + l + "' repeated");
  for (std::size_t i = 0; i < probs.size(); ++i)
    if (probs[i] < 0)
      fail("NegativeEntry", "probs[" + std::to_string(i) + "] < 0");
  if (rat_sum(probs) != 1)
    fail("WeightSum", "probabilities sum to " + rat_str(rat_sum(probs)) +
                          ", expected 1");
  return FiniteProbability{std::move(labels), std::move(probs)};
}

FiniteProbability zero_object(const std::string &label) {
  return FiniteProbability{{label}, {Rational(1)}};
}

StochasticMorphism validate(const RationalMatrix &matrix,
                            const FiniteProbability &source,
                            const FiniteProbability &target) {
  if (matrix.size() != target.size())
    fail("ShapeMismatch", "matrix has " + std::to_string(matrix.size()) +
                              " rows, target has " +
                              std::to_string(target.size()) + " points");
  for (std::size_t r = 0; r < matrix.size(); ++r)
    if (matrix[r].size() != source.size())
      fail("ShapeMismatch", "row " + std::to_string(r) + " has wrong width");

  for (std::size_t r = 0; r < matrix.size(); ++r)
    for (std::size_t c = 0; c < matrix[r].size(); ++c)
      if (matrix[r][c] < 0)
        fail("NegativeEntry", "entry (" + std::to_string(r) + "," +
                                  std::to_string(c) + ") is negative");

  for (std::size_t c = 0; c < source.size(); ++c) {
    Rational colsum = 0;
    for (std::size_t r = 0; r < target.size(); ++r) colsum += matrix[r][c];
    if (colsum != 1)
      fail("ColumnNotStochastic", "column " + std::to_string(c) + " sums to " +
                                      rat_str(colsum));
  }

  RationalVector image = mat_vec(matrix, source.probs);
  for (std::size_t r = 0; r < target.size(); ++r)
    if (image[r] != target.probs[r])
      fail("MeasureNotPreserved",
           "row " + std::to_string(r) + ": S*P gives " + rat_str(image[r]) +
               ", target has " + rat_str(target.probs[r]));

  return StochasticMorphism{source, target, matrix};
}

StochasticMorphism identity(const FiniteProbability &p) {
  RationalMatrix m(p.size(), RationalVector(p.size(), Rational(0)));
  for (std::size_t i = 0; i < p.size(); ++i) m[i][i] = 1;
  return StochasticMorphism{p, p, std::move(m)};
}

StochasticMorphism compose(const StochasticMorphism &second,
                           const StochasticMorphism &first) {
  if (!(first.target == second.source))
    fail("SourceTargetMismatch",
         "target of the first morphism differs from source of the second");
  return StochasticMorphism{first.source, second.target,
                            mat_mul(second.matrix, first.matrix)};
}

StochasticMorphism target_morphism(const FiniteProbability &p,
                                   const FiniteProbability &q) {
  RationalMatrix m(q.size(), RationalVector(p.size()));
  for (std::size_t r = 0; r < q.size(); ++r)
    for (std::size_t c = 0; c < p.size(); ++c) m[r][c] = q.probs[r];
  return StochasticMorphism{p, q, std::move(m)};
}

StochasticMorphism to_zero(const FiniteProbability &p) {
  return target_morphism(p, zero_object());
}

StochasticMorphism from_zero(const FiniteProbability &q) {
  return target_morphism(zero_object(), q);
}

FiniteProbability coproduct_objects(const FiniteProbability &p,
                                    const FiniteProbability &q) {
  FiniteProbability out;
  out.labels.reserve(p.size() * q.size());
  out.probs.reserve(p.size() * q.size());
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < q.size(); ++b) {
      out.labels.push_back(p.labels[a] + "|" + q.labels[b]);
      out.probs.push_back(p.probs[a] * q.probs[b]);
    }
  return out;
}

Coproduct coproduct_morphisms(const StochasticMorphism &left,
                              const StochasticMorphism &right) {
  if (!(left.target == right.target))
    fail("TargetMismatch", "coproduct requires morphisms with a common target");
  const FiniteProbability &lam = left.source;
  const FiniteProbability &lam2 = right.source;
  const FiniteProbability &sigma = left.target;
  FiniteProbability object = coproduct_objects(lam, lam2);

  auto col = [&](std::size_t a, std::size_t a2) { return a * lam2.size() + a2; };

  // I_{(b,b'),a} = delta_{ab} lambda'_{b'} ; I'_{(b,b'),a'} = delta_{a'b'} lambda_b
  RationalMatrix inl(object.size(), RationalVector(lam.size(), Rational(0)));
  RationalMatrix inr(object.size(), RationalVector(lam2.size(), Rational(0)));
  for (std::size_t b = 0; b < lam.size(); ++b)
    for (std::size_t b2 = 0; b2 < lam2.size(); ++b2) {
      inl[col(b, b2)][b] = lam2.probs[b2];
      inr[col(b, b2)][b2] = lam.probs[b];
    }

  RationalMatrix copair(sigma.size(), RationalVector(object.size()));
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    const bool zero_row = sigma.probs[k] == 0;
    for (std::size_t a = 0; a < lam.size(); ++a)
      for (std::size_t a2 = 0; a2 < lam2.size(); ++a2) {
        copair[k][col(a, a2)] =
            zero_row
                ? Rational(left.matrix[k][a] + right.matrix[k][a2])
                : Rational(left.matrix[k][a] * right.matrix[k][a2] /
                           sigma.probs[k]);
      }
  }

  return Coproduct{object, StochasticMorphism{lam, object, std::move(inl)},
                   StochasticMorphism{lam2, object, std::move(inr)},
                   StochasticMorphism{object, sigma, std::move(copair)}};
}

StochasticMorphism direct_sum(const Rational &lambda,
                              const StochasticMorphism &left,
                              const StochasticMorphism &right) {
  if (!(left.target == right.target))
    fail("TargetMismatch", "direct sum requires a common target");
  if (!is_zero_one_range(lambda)) fail("NegativeEntry", "lambda outside [0,1]");
  FiniteProbability src;
  for (std::size_t i = 0; i < left.source.size(); ++i) {
    src.labels.push_back("L." + left.source.labels[i]);
    src.probs.push_back(lambda * left.source.probs[i]);
  }
  for (std::size_t i = 0; i < right.source.size(); ++i) {
    src.labels.push_back("R." + right.source.labels[i]);
    src.probs.push_back((1 - lambda) * right.source.probs[i]);
  }
  RationalMatrix m(left.target.size(),
                   RationalVector(src.size(), Rational(0)));
  for (std::size_t r = 0; r < left.target.size(); ++r) {
    for (std::size_t c = 0; c < left.source.size(); ++c)
      m[r][c] = left.matrix[r][c];
    for (std::size_t c = 0; c < right.source.size(); ++c)
      m[r][left.source.size() + c] = right.matrix[r][c];
  }
  return StochasticMorphism{src, left.target, std::move(m)};
}

StochasticMorphism mixture(const Rational &lambda,
                           const StochasticMorphism &left,
                           const StochasticMorphism &right,
                           const FiniteProbability &source,
                           const FiniteProbability &target) {
  if (left.matrix.size() != right.matrix.size() ||
      left.source.size() != right.source.size())
    fail("ShapeMismatch", "mixture requires equal shapes");
  RationalMatrix m(left.matrix.size(),
                   RationalVector(left.source.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c)
      m[r][c] = lambda * left.matrix[r][c] + (1 - lambda) * right.matrix[r][c];
  return validate(m, source, target);
}

FiniteProbability marginal_left(const FiniteProbability &product,
                                std::size_t left_size) {
  std::size_t right_size = product.size() / left_size;
  FiniteProbability out;
  for (std::size_t a = 0; a < left_size; ++a) {
    Rational s = 0;
    for (std::size_t b = 0; b < right_size; ++b)
      s += product.probs[a * right_size + b];
    auto label = product.labels[a * right_size];
    out.labels.push_back(label.substr(0, label.find('|')));
    out.probs.push_back(s);
  }
  return out;
}

FiniteProbability marginal_right(const FiniteProbability &product,
                                 std::size_t left_size) {
  std::size_t right_size = product.size() / left_size;
  FiniteProbability out;
  for (std::size_t b = 0; b < right_size; ++b) {
    Rational s = 0;
    for (std::size_t a = 0; a < left_size; ++a)
      s += product.probs[a * right_size + b];
    auto label = product.labels[b];
    out.labels.push_back(label.substr(label.find('|') + 1));
    out.probs.push_back(s);
  }
  return out;
}

} // namespace gammacat::finprob
