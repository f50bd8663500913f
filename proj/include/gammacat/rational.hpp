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

#ifndef GAMMACAT_RATIONAL_HPP
#define GAMMACAT_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gammacat/error.hpp"

namespace gammacat {

// Exact arithmetic everywhere a probability lives: categorical identities are
// asserted with zero tolerance, so floating point is not an option here.
using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

// Parses "p/q" or "p" (arbitrary precision, optional sign). Anything else,
// including floats, is rejected with ParseError.
Rational rat_parse(std::string_view text);

// Canonical form: lowest terms, "p/q" with q > 1, plain "p" otherwise.
std::string rat_str(const Rational &q);

double rat_double(const Rational &q);

Rational rat_sum(const RationalVector &v);

// (rows x cols) * (cols) exact product.
RationalVector mat_vec(const RationalMatrix &m, const RationalVector &v);

// Exact matrix product a * b.
RationalMatrix mat_mul(const RationalMatrix &a, const RationalMatrix &b);

bool is_zero_one_range(const Rational &q); // 0 <= q <= 1

} // namespace gammacat

#endif
