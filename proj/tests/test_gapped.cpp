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

#include <cmath>
#include <functional>
#include <random>

#include "gammacat/gapped.hpp"

using namespace gammacat;
using namespace gammacat::gapped;
using quantum::CMatrix;
using quantum::Complex;

namespace {

std::string error_kind(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  return "";
}

CMatrix diag(std::initializer_list<double> entries) {
  CMatrix m = CMatrix::Zero(Eigen::Index(entries.size()),
                            Eigen::Index(entries.size()));
  Eigen::Index i = 0;
  for (double e : entries) m(i, i) = e, ++i;
  return m;
}

} // namespace

TEST_CASE("gapped Hamiltonian validation") {
  CHECK_NOTHROW(validate_gapped(diag({0, 1}), 1.0));
  CHECK(error_kind([&] { validate_gapped(diag({0, 0.5, 2}), 1.0); }) ==
        "GapViolated");
  CHECK(error_kind([&] { validate_gapped(diag({0.1, 1.1}), 1.0); }) ==
        "NoZeroGroundState");
}

TEST_CASE("Gibbs states") {
  auto h = validate_gapped(diag({0, 1}), 1.0);
  auto rho = gibbs(h, std::log(3.0));
  CHECK(rho.rho(0, 0).real() == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(rho.rho(1, 1).real() == doctest::Approx(0.25).epsilon(1e-12));

  auto cold = gibbs(h, 50.0);
  CHECK(cold.rho(0, 0).real() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(cold.rho(1, 1).real() == doctest::Approx(0.0).epsilon(1e-9));

  auto trivial = validate_gapped(diag({0}), 2.0);
  CHECK(gibbs(trivial, 1.0).rho(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("gap locus reference values") {
  SUBCASE("threshold: beta*delta = ln(7 + 4 sqrt 3)") {
    double bd = gap_threshold_beta_delta();
    CHECK(bd == doctest::Approx(2.6339157938).epsilon(1e-9));
    auto locus = gap_locus(bd, 1.0);
    CHECK(locus.c == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(locus.feasible);
    CHECK(locus.alpha_lo == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(locus.alpha_hi == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(locus.radius_sq(0.5) == doctest::Approx(0.0).epsilon(1e-12));
    // exact algebra: (7 - 4 sqrt 3)(7 + 4 sqrt 3) = 1
    CHECK(kGapThresholdT * (7.0 + 4.0 * std::sqrt(3.0)) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("t = 0.01") {
    auto locus = gap_locus(-std::log(0.01), 1.0);
    CHECK(locus.t == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(locus.c == doctest::Approx(0.0392118419).epsilon(1e-6));
    CHECK(locus.alpha_lo == doctest::Approx(0.040883).epsilon(1e-4));
    CHECK(locus.alpha_hi == doctest::Approx(0.959117).epsilon(1e-4));
    CHECK(locus.radius_sq(0.5) == doctest::Approx(0.210788).epsilon(1e-4));
    // independent quadratic-root evaluation
    double root = (1.0 - std::sqrt(1.0 - 4.0 * locus.c)) / 2.0;
    CHECK(locus.alpha_lo == doctest::Approx(root).epsilon(1e-9));
  }
  SUBCASE("beta*delta = ln 3 is infeasible, exactly c = 3/4") {
    auto locus = gap_locus(std::log(3.0), 1.0);
    CHECK(locus.c == doctest::Approx(0.75).epsilon(1e-12));
    CHECK_FALSE(locus.feasible);
  }
  SUBCASE("feasibility flips exactly once, bisected to 1e-9") {
    double lo = 1.0, hi = 5.0;
    REQUIRE_FALSE(gap_locus(lo, 1.0).feasible);
    REQUIRE(gap_locus(hi, 1.0).feasible);
    while (hi - lo > 1e-10) {
      double mid = (lo + hi) / 2;
      (gap_locus(mid, 1.0).feasible ? hi : lo) = mid;
    }
    CHECK(lo == doctest::Approx(gap_threshold_beta_delta()).epsilon(1e-9));
  }
  SUBCASE("radius vanishes at the interval ends and peaks at one half") {
    auto locus = gap_locus(3.0, 1.0);
    REQUIRE(locus.feasible);
    CHECK(locus.radius_sq(locus.alpha_lo) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(locus.radius_sq(locus.alpha_hi) ==
          doctest::Approx(0.0).epsilon(1e-12));
    for (int i = 0; i <= 20; ++i) {
      double a = locus.alpha_lo +
                 (locus.alpha_hi - locus.alpha_lo) * (double(i) / 20.0);
      CHECK(locus.radius_sq(0.5) >= locus.radius_sq(a) - 1e-15);
    }
  }
}

TEST_CASE("on-locus states are Gibbs states of gapped two-level systems") {
  const double beta = 3.0, delta = 1.0;
  auto locus = gap_locus(beta, delta);
  REQUIRE(locus.feasible);
  for (int i = 1; i < 8; ++i) {
    double alpha = locus.alpha_lo +
                   (locus.alpha_hi - locus.alpha_lo) * (double(i) / 8.0);
    double r = std::sqrt(locus.radius_sq(alpha));
    CMatrix rho(2, 2);
    rho << alpha, r, r, 1 - alpha;
    auto d = quantum::validate_density(rho);
    CHECK(d.eigenvalues[0] ==
          doctest::Approx(locus.t / (1 + locus.t)).epsilon(1e-9));
    CHECK(d.eigenvalues[1] ==
          doctest::Approx(1.0 / (1 + locus.t)).epsilon(1e-9));
    // reconstruct H = -(1/beta) log((1+t) rho) and validate the gap
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho);
    CMatrix h = es.eigenvectors() *
                (-(es.eigenvalues().array() * (1 + locus.t)).log() / beta)
                    .matrix()
                    .asDiagonal() *
                es.eigenvectors().adjoint();
    auto gh = validate_gapped(h, delta, 1e-6);
    CHECK(gh.spectrum[0] == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(gh.spectrum[1] == doctest::Approx(delta).epsilon(1e-6));
  }
}

TEST_CASE("Kronecker sums keep the gap") {
  auto a = validate_gapped(diag({0, 1}), 1.0);
  auto sum = kronecker_sum_gap(a, a);
  const std::vector<double> want_sum{0, 1, 1, 2};
  REQUIRE(sum.spectrum.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(sum.spectrum[i] == doctest::Approx(want_sum[i]).epsilon(1e-12));

  auto b = validate_gapped(diag({0, 2}), 1.0);
  auto mixed = kronecker_sum_gap(a, b);
  const std::vector<double> want_mixed{0, 1, 2, 3};
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(mixed.spectrum[i] == doctest::Approx(want_mixed[i]).epsilon(1e-12));

  std::mt19937_64 rng(71);
  std::normal_distribution<double> gauss;
  for (int t = 0; t < 30; ++t) {
    // random gapped pair via unitary conjugation of gapped diagonals
    auto random_gapped = [&](Eigen::Index dim) {
      CMatrix herm(dim, dim);
      for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j <= i; ++j) {
          herm(i, j) = i == j ? Complex(gauss(rng))
                              : Complex(gauss(rng), gauss(rng));
          herm(j, i) = std::conj(herm(i, j));
        }
      Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
      CMatrix d = CMatrix::Zero(dim, dim);
      for (Eigen::Index i = 1; i < dim; ++i)
        d(i, i) = 1.0 + std::abs(gauss(rng));
      return validate_gapped(es.eigenvectors() * d *
                                 es.eigenvectors().adjoint(),
                             1.0);
    };
    auto h1 = random_gapped(2 + rng() % 2);
    auto h2 = random_gapped(2 + rng() % 2);
    auto ks = kronecker_sum_gap(h1, h2);
    // pairwise-sum oracle
    std::vector<double> sums;
    for (double x : h1.spectrum)
      for (double y : h2.spectrum) sums.push_back(x + y);
    std::sort(sums.begin(), sums.end());
    REQUIRE(sums.size() == ks.spectrum.size());
    for (std::size_t i = 0; i < sums.size(); ++i)
      CHECK(ks.spectrum[i] == doctest::Approx(sums[i]).epsilon(1e-9));
  }
}

TEST_CASE("gap preserving channels") {
  auto h = validate_gapped(diag({0, 1}), 1.0);
  const double beta = 2.0;
  SUBCASE("identity preserves") {
    CHECK(is_gap_preserving(quantum::identity_channel(2), h, h, beta));
  }
  SUBCASE("unitary conjugation preserves against the conjugated Hamiltonian") {
    CMatrix u(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    u << s, s, s, -s;
    auto conj = quantum::channel_from_kraus({u});
    auto h2 = validate_gapped(u * h.h * u.adjoint(), 1.0);
    CHECK(is_gap_preserving(conj, h, h2, beta));
    CHECK_FALSE(is_gap_preserving(conj, h, h, beta));
  }
  SUBCASE("dephasing destroys an off-diagonal Gibbs state") {
    // H with off-diagonal Gibbs state, built from on-locus data
    auto locus = gap_locus(beta, 1.0);
    REQUIRE(locus.feasible);
    double alpha = 0.5;
    double r = std::sqrt(locus.radius_sq(alpha));
    CMatrix rho(2, 2);
    rho << alpha, r, r, 1 - alpha;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho);
    CMatrix hm = es.eigenvectors() *
                 (-(es.eigenvalues().array() * (1 + locus.t)).log() / beta)
                     .matrix()
                     .asDiagonal() *
                 es.eigenvectors().adjoint();
    auto hh = validate_gapped(hm, 1.0, 1e-6);
    CMatrix k0 = CMatrix::Zero(2, 2), k1 = CMatrix::Zero(2, 2);
    k0(0, 0) = 1;
    k1(1, 1) = 1;
    auto dephase = quantum::channel_from_kraus({k0, k1});
    CHECK_FALSE(is_gap_preserving(dephase, hh, hh, beta));
    CHECK(is_gap_preserving(quantum::identity_channel(2), hh, hh, beta));
  }
  SUBCASE("membership is closed under composition") {
    CMatrix u(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    u << s, s, s, -s;
    auto cu = quantum::channel_from_kraus({u});
    auto h2 = validate_gapped(u * h.h * u.adjoint(), 1.0);
    CMatrix v(2, 2);
    v << Complex(0, 1) * s, s, s, Complex(0, 1) * s;
    auto cv = quantum::channel_from_kraus({v});
    auto h3 = validate_gapped(v * h2.h * v.adjoint(), 1.0);
    REQUIRE(is_gap_preserving(cu, h, h2, beta));
    REQUIRE(is_gap_preserving(cv, h2, h3, beta));
    CHECK(is_gap_preserving(quantum::compose(cv, cu), h, h3, beta));
  }
}

TEST_CASE("localization words reduce under the three displayed rules") {
  auto h = validate_gapped(diag({0, 1}), 1.0);
  CMatrix u(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  u << s, s, s, -s;
  auto h2 = validate_gapped(u * h.h * u.adjoint(), 1.0);

  MorphismRegistry reg;
  auto phi = reg.add({quantum::channel_from_kraus({u}), 0, 1, true});
  auto psi = reg.add({quantum::channel_from_kraus({u.adjoint()}), 1, 0, true});
  auto tau = reg.add({quantum::identity_channel(2), 0, 0, false});

  SUBCASE("inverse pairs cancel to the empty word") {
    LocalizationWord w{0, {Letter{phi, false}, Letter{phi, true}}};
    auto r = reduce_word(reg, w);
    CHECK(r.letters.empty());
    CHECK(r.start_object == 0);
  }
  SUBCASE("adjacent forward letters compose") {
    LocalizationWord w{0, {Letter{phi, false}, Letter{psi, false}}};
    auto r = reduce_word(reg, w);
    REQUIRE(r.letters.size() == 1);
    CHECK_FALSE(r.letters[0].inverse);
    const auto &e = reg.entry(r.letters[0].morphism);
    CHECK(e.source_object == 0);
    CHECK(e.target_object == 0);
  }
  SUBCASE("mixed words reduce to the expected length") {
    // [phi^-1, tau, tau, phi^-1] with composable middle: one composition,
    // no cancellations
    LocalizationWord w{1,
                       {Letter{phi, true}, Letter{tau, false},
                        Letter{tau, false}, Letter{phi, true}}};
    auto r = reduce_word(reg, w);
    CHECK(r.letters.size() == 3);
    auto again = reduce_word(reg, r);
    CHECK(again.letters.size() == 3);
  }
  SUBCASE("inverses require T_Delta membership") {
    LocalizationWord w{0, {Letter{tau, true}}};
    CHECK(error_kind([&] { reduce_word(reg, w); }) == "IllFormedWord");
  }
  SUBCASE("endpoint mismatches are rejected") {
    LocalizationWord w{0, {Letter{phi, false}, Letter{phi, false}}};
    CHECK(error_kind([&] { reduce_word(reg, w); }) == "IllFormedWord");
  }
}

TEST_CASE("gapped realization descriptor") {
  SUBCASE("near the threshold the cube degenerates to its center") {
    double bd = gap_threshold_beta_delta();
    auto d = gapped_realization_descriptor(2, bd + 1e-12, 1.0);
    CHECK(d.interval_lo == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(d.interval_hi == doctest::Approx(0.5).epsilon(1e-5));
  }
  SUBCASE("t = 0.01 interval and radius") {
    auto d = gapped_realization_descriptor(1, -std::log(0.01), 1.0);
    CHECK(d.interval_lo == doctest::Approx(0.0409).epsilon(1e-2));
    CHECK(d.interval_hi == doctest::Approx(0.9591).epsilon(1e-2));
    REQUIRE(d.strata.size() == 2);
  }
  SUBCASE("membership counts the one-half coordinates inside the interval") {
    auto locus = gap_locus(-std::log(0.01), 1.0);
    CHECK(gapped_stratum_of(locus, {0.5, 0.0409}, 1e-3) == 1);
    CHECK(error_kind([&] { gapped_stratum_of(locus, {0.001}); }) ==
          "NotSubset");
  }
  SUBCASE("infeasible loci are rejected") {
    CHECK(error_kind([&] { gapped_realization_descriptor(1, 1.0, 1.0); }) ==
          "InfeasibleLocus");
  }
}
