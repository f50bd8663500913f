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

#include "gammacat/gapped.hpp"

#include <cmath>

namespace gammacat::gapped {

GappedHamiltonian validate_gapped(const CMatrix &h, double delta, double tol) {
  if (h.rows() != h.cols()) fail("DimensionMismatch", "Hamiltonian not square");
  if (delta <= 0) fail("GapViolated", "gap must be positive");
  double defect = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (defect > tol)
    fail("NotHermitian", "||H - H^*||_inf = " + std::to_string(defect));
  Eigen::SelfAdjointEigenSolver<CMatrix> solver((h + h.adjoint()) / 2.0);
  std::vector<double> spec(solver.eigenvalues().data(),
                           solver.eigenvalues().data() +
                               solver.eigenvalues().size());
  if (std::abs(spec.front()) > tol)
    fail("NoZeroGroundState",
         "minimal eigenvalue is " + std::to_string(spec.front()));
  for (double e : spec)
    if (std::abs(e) > tol && e < delta - tol)
      fail("GapViolated", "eigenvalue " + std::to_string(e) +
                              " lies inside the gap (0, " +
                              std::to_string(delta) + ")");
  GappedHamiltonian out;
  out.h = (h + h.adjoint()) / 2.0;
  out.delta = delta;
  out.spectrum = std::move(spec);
  return out;
}

quantum::DensityMatrix gibbs(const GappedHamiltonian &h, double beta) {
  if (beta <= 0) fail("NegativeEntry", "beta must be positive");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.h);
  Eigen::VectorXd w = (-beta * solver.eigenvalues().array()).exp();
  double z = w.sum();
  CMatrix rho = solver.eigenvectors() * (w / z).asDiagonal() *
                solver.eigenvectors().adjoint();
  return quantum::validate_density(rho);
}

double gap_threshold_beta_delta() {
  return std::log(7.0 + 4.0 * std::sqrt(3.0));
}

GapLocus gap_locus(double beta, double delta) {
  if (beta <= 0 || delta <= 0)
    fail("NegativeEntry", "beta and delta must be positive");
  GapLocus l;
  l.beta = beta;
  l.delta = delta;
  l.t = std::exp(-beta * delta);
  l.c = 4.0 * l.t / ((1.0 + l.t) * (1.0 + l.t));
  l.feasible = l.c <= 0.25;
  if (l.feasible) {
    double root = std::sqrt(0.25 - l.c);
    l.alpha_lo = 0.5 - root;
    l.alpha_hi = 0.5 + root;
  }
  return l;
}

GappedHamiltonian kronecker_sum_gap(const GappedHamiltonian &a,
                                    const GappedHamiltonian &b) {
  if (a.delta != b.delta)
    fail("DimensionMismatch", "Kronecker sum requires a common gap");
  const Eigen::Index n = a.h.rows(), m = b.h.rows();
  CMatrix big = quantum::kron(a.h, CMatrix::Identity(m, m)) +
                quantum::kron(CMatrix::Identity(n, n), b.h);
  return validate_gapped(big, a.delta);
}

bool is_gap_preserving(const quantum::QuantumChannel &phi,
                       const GappedHamiltonian &h, const GappedHamiltonian &h2,
                       double beta, double tol) {
  auto src = gibbs(h, beta);
  auto dst = gibbs(h2, beta);
  if (phi.dim_in != src.dim() || phi.dim_out != dst.dim()) return false;
  return (phi.apply(src.rho) - dst.rho).cwiseAbs().maxCoeff() < tol;
}

//===========================================================================
// Localization words
//===========================================================================

std::size_t MorphismRegistry::add(Entry e) {
  entries_.push_back(std::move(e));
  return entries_.size() - 1;
}

std::size_t MorphismRegistry::compose(std::size_t second, std::size_t first) {
  auto it = compose_cache_.find({second, first});
  if (it != compose_cache_.end()) return it->second;
  const Entry &f = entries_.at(first);
  const Entry &g = entries_.at(second);
  if (f.target_object != g.source_object)
    fail("IllFormedWord", "letters are not composable");
  Entry composite;
  composite.channel = quantum::compose(g.channel, f.channel);
  composite.source_object = f.source_object;
  composite.target_object = g.target_object;
  // membership of T_Delta is endpoint data; the composite of gap
  // preserving channels between registered gapped endpoints stays inside
  composite.in_t_delta = f.in_t_delta && g.in_t_delta;
  std::size_t id = add(std::move(composite));
  compose_cache_[{second, first}] = id;
  return id;
}

namespace {

std::size_t letter_source(const MorphismRegistry &reg, const Letter &l) {
  const auto &e = reg.entry(l.morphism);
  return l.inverse ? e.target_object : e.source_object;
}

std::size_t letter_target(const MorphismRegistry &reg, const Letter &l) {
  const auto &e = reg.entry(l.morphism);
  return l.inverse ? e.source_object : e.target_object;
}

} // namespace

void validate_word(const MorphismRegistry &reg, const LocalizationWord &w) {
  std::size_t at = w.start_object;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const Letter &l = w.letters[i];
    if (l.morphism >= reg.size())
      fail("IllFormedWord", "letter " + std::to_string(i) + " unknown");
    if (l.inverse && !reg.entry(l.morphism).in_t_delta)
      fail("IllFormedWord", "letter " + std::to_string(i) +
                                " inverts a morphism outside T_Delta");
    if (letter_source(reg, l) != at)
      fail("IllFormedWord", "letter " + std::to_string(i) +
                                " does not start at the current object");
    at = letter_target(reg, l);
  }
}

LocalizationWord reduce_word(MorphismRegistry &reg,
                             const LocalizationWord &w) {
  validate_word(reg, w);
  LocalizationWord out = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < out.letters.size(); ++i) {
      Letter &a = out.letters[i];
      Letter &b = out.letters[i + 1];
      if (!a.inverse && !b.inverse) {
        a = Letter{reg.compose(b.morphism, a.morphism), false};
        out.letters.erase(out.letters.begin() + i + 1);
        changed = true;
        break;
      }
      if (a.morphism == b.morphism && a.inverse != b.inverse) {
        out.letters.erase(out.letters.begin() + i,
                          out.letters.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  return out;
}

summing::RealizationDescriptor gapped_realization_descriptor(std::size_t n,
                                                             double beta,
                                                             double delta) {
  GapLocus locus = gap_locus(beta, delta);
  if (!locus.feasible)
    fail("InfeasibleLocus",
         "beta*delta = " + std::to_string(beta * delta) +
             " is below the threshold ln(7+4*sqrt(3)) = " +
             std::to_string(gap_threshold_beta_delta()));
  summing::RealizationDescriptor d;
  d.kind = summing::RealizationDescriptor::Kind::GappedTorus;
  d.n = n;
  d.beta = beta;
  d.delta = delta;
  d.interval_lo = locus.alpha_lo;
  d.interval_hi = locus.alpha_hi;
  d.ambient = "union over Z in [a,b]^" + std::to_string(n) +
              " and k of I_Z^k x T^{N-k} with circle radii r^2(alpha) = "
              "alpha(1-alpha) - 4t/(1+t)^2";
  for (std::size_t j = 0; j <= n; ++j) {
    std::string stab;
    if (j > 0) {
      stab += "U(2)";
      if (j > 1) stab += "^" + std::to_string(j);
    }
    if (j < n) {
      if (!stab.empty()) stab += " (x) ";
      stab += "(U(1)xU(1))";
      if (n - j > 1) stab += "^" + std::to_string(n - j);
    }
    d.strata.push_back(summing::Stratum{
        int(j), stab,
        "alpha sequences in [a,b]^N with " + std::to_string(j) +
            " coordinates equal to 1/2"});
  }
  return d;
}

int gapped_stratum_of(const GapLocus &locus, const std::vector<double> &alpha,
                      double tol) {
  if (!locus.feasible) fail("InfeasibleLocus", "empty locus");
  int j = 0;
  for (double a : alpha) {
    if (a < locus.alpha_lo - tol || a > locus.alpha_hi + tol)
      fail("NotSubset", "alpha coordinate " + std::to_string(a) +
                            " outside the feasible interval");
    if (std::abs(a - 0.5) <= tol) ++j;
  }
  return j;
}

} // namespace gammacat::gapped
