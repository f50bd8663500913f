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

#include "gammacat/rational.hpp"

#include <cctype>

namespace gammacat {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace

Rational rat_parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string num, den = "1";
  auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(body);
  } else {
    num = std::string(body.substr(0, slash));
    den = std::string(body.substr(slash + 1));
  }
  if (!all_digits(num) || !all_digits(den))
    fail("ParseError", "not a rational 'p/q': '" + std::string(text) + "'");
  boost::multiprecision::cpp_int n(num), d(den);
  if (d == 0) fail("ParseError", "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

std::string rat_str(const Rational &q) {
  return q.str();
}

double rat_double(const Rational &q) {
  return q.convert_to<double>();
}

Rational rat_sum(const RationalVector &v) {
  Rational s = 0;
  for (const auto &x : v) s += x;
  return s;
}

RationalVector mat_vec(const RationalMatrix &m, const RationalVector &v) {
  RationalVector out(m.size(), Rational(0));
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (m[r].size() != v.size())
      fail("ParseError", "matrix row " + std::to_string(r) + " has wrong width");
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
  }
  return out;
}

RationalMatrix mat_mul(const RationalMatrix &a, const RationalMatrix &b) {
  std::size_t rows = a.size();
  std::size_t mid = b.size();
  std::size_t cols = mid == 0 ? 0 : b[0].size();
  RationalMatrix out(rows, RationalVector(cols, Rational(0)));
  for (std::size_t r = 0; r < rows; ++r) {
    if (a[r].size() != mid) fail("ParseError", "inner dimensions do not match");
    for (std::size_t k = 0; k < mid; ++k) {
      if (a[r][k] == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) out[r][c] += a[r][k] * b[k][c];
    }
  }
  return out;
}

bool is_zero_one_range(const Rational &q) { return q >= 0 && q <= 1; }

} // namespace gammacat
