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

#ifndef GAMMACAT_JSON_IO_HPP
#define GAMMACAT_JSON_IO_HPP

#include <initializer_list>
#include <string>

#include <json.hpp>

#include "gammacat/category.hpp"
#include "gammacat/cubical.hpp"
#include "gammacat/finprob.hpp"
#include "gammacat/gapped.hpp"
#include "gammacat/probcat.hpp"
#include "gammacat/quantum.hpp"
#include "gammacat/summing.hpp"

namespace gammacat::io {

// Ordered JSON keeps reports byte-stable; keys appear in insertion order.
using Json = nlohmann::ordered_json;

// Real numbers are rounded to 12 significant digits before emission.
Json jreal(double x);

// Rejects unknown fields; lists the offender.
void expect_keys(const Json &j, std::initializer_list<const char *> allowed,
                 const std::string &where);
const Json &require(const Json &j, const std::string &key,
                    const std::string &where);

// Rationals travel as "p/q" strings; floats are rejected where a rational
// is required.
Json jrat(const Rational &q);
Rational rational_from_json(const Json &j, const std::string &where);
Json jrat(const RationalVector &v);
RationalVector rational_vector_from_json(const Json &j,
                                         const std::string &where);
Json jrat(const RationalMatrix &m);
RationalMatrix rational_matrix_from_json(const Json &j,
                                         const std::string &where);

Json to_json(const finprob::FiniteProbability &p);
finprob::FiniteProbability probability_from_json(const Json &j);
Json to_json(const finprob::StochasticMorphism &s);
finprob::StochasticMorphism morphism_from_json(const Json &j);

Json to_json(const pointed::PointedSet &s);
pointed::PointedSet pointed_set_from_json(const Json &j);
Json to_json(const probcat::ProbPointedSet &x);
probcat::ProbPointedSet prob_pointed_set_from_json(const Json &j);
Json to_json(const probcat::ProbMorphism &phi);
probcat::ProbMorphism prob_morphism_from_json(const Json &j);

Json to_json(const quantum::Complex &c);
quantum::Complex complex_from_json(const Json &j, const std::string &where);
Json to_json(const quantum::CMatrix &m);
quantum::CMatrix cmatrix_from_json(const Json &j, const std::string &where);
Json to_json(const quantum::DensityMatrix &d);
quantum::DensityMatrix density_from_json(const Json &j);
Json to_json(const quantum::QuantumChannel &c);
quantum::QuantumChannel channel_from_json(const Json &j);

Json to_json(const category::FiniteCategorySpec &c);
category::FiniteCategorySpec category_from_json(const Json &j);

// Cell complex export: level-indexed cells with face incidence, degeneracy
// flags and the basepoint mark, in stable order.
Json to_json(const cubical::TruncatedCubicalSet &k);
cubical::TruncatedCubicalSet cubical_from_json(const Json &j);

Json to_json(const summing::RealizationDescriptor &d);
Json to_json(const gapped::GapLocus &l);

} // namespace gammacat::io

#endif
