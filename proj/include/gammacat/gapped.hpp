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

#ifndef GAMMACAT_GAPPED_HPP
#define GAMMACAT_GAPPED_HPP

#include <optional>
#include <string>
#include <vector>

#include "gammacat/quantum.hpp"
#include "gammacat/summing.hpp"

namespace gammacat::gapped {

using quantum::CMatrix;

// Hermitian Hamiltonian with 0 in the spectrum and every other eigenvalue
// at least Delta.
struct GappedHamiltonian {
  CMatrix h;
  double delta = 0.0;
  std::vector<double> spectrum; // ascending
};

// Errors: NotHermitian, NoZeroGroundState, GapViolated (with the offending
// eigenvalue).
GappedHamiltonian validate_gapped(const CMatrix &h, double delta,
                                  double tol = quantum::kSpectralTol);

// Gibbs state e^{-beta H} / Tr e^{-beta H}, via the spectral decomposition.
quantum::DensityMatrix gibbs(const GappedHamiltonian &h, double beta);

// Feasibility locus of the gapped two-site states: with t = e^{-beta Delta}
// and c = 4t/(1+t)^2 the constraint |theta|^2 = alpha(1-alpha) - c has
// solutions iff c <= 1/4, i.e. t <= 7 - 4*sqrt(3); the alpha interval is
// bounded by the roots of alpha(1-alpha) = c.
struct GapLocus {
  double beta = 0.0;
  double delta = 0.0;
  double t = 0.0;        // e^{-beta delta}
  double c = 0.0;        // 4t / (1+t)^2
  bool feasible = false;
  double alpha_lo = 0.0; // empty interval when infeasible
  double alpha_hi = 0.0;

  double radius_sq(double alpha) const { return alpha * (1 - alpha) - c; }
};

// The closed-form feasibility threshold t* = 7 - 4 sqrt(3) (equivalently
// beta Delta >= ln(7 + 4 sqrt(3))): 16 t <= (1+t)^2 on (0,1] exactly up to
// the smaller root of t^2 - 14 t + 1.
inline constexpr double kGapThresholdT = 7.0 - 4.0 * 1.7320508075688772935;
double gap_threshold_beta_delta(); // ln(7 + 4 sqrt 3)

GapLocus gap_locus(double beta, double delta);

// Kronecker sum H (x) 1 + 1 (x) H'; the spectrum consists of pairwise sums
// of eigenvalues so the gap survives. Both inputs must share delta.
GappedHamiltonian kronecker_sum_gap(const GappedHamiltonian &a,
                                    const GappedHamiltonian &b);

// Membership test for the localized class T_Delta: the channel maps the
// Gibbs state of h to the Gibbs state of h2 within tol.
bool is_gap_preserving(const quantum::QuantumChannel &phi,
                       const GappedHamiltonian &h, const GappedHamiltonian &h2,
                       double beta, double tol = quantum::kSpectralTol);

//===========================================================================
// Localization words
//===========================================================================

// Registry of the morphisms a word may reference. Forward letters compose;
// formal inverses are only allowed on T_Delta members.
class MorphismRegistry {
public:
  struct Entry {
    quantum::QuantumChannel channel;
    std::size_t source_object = 0;
    std::size_t target_object = 0;
    bool in_t_delta = false;
  };

  std::size_t add(Entry e);
  const Entry &entry(std::size_t id) const { return entries_.at(id); }
  std::size_t size() const { return entries_.size(); }

  // composition of registered forward morphisms, memoized
  std::size_t compose(std::size_t second, std::size_t first);

private:
  std::vector<Entry> entries_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose_cache_;
};

struct Letter {
  std::size_t morphism = 0;
  bool inverse = false;
};

struct LocalizationWord {
  std::size_t start_object = 0; // anchor for the empty word
  std::vector<Letter> letters;
};

// IllFormedWord on endpoint mismatches or inverses outside T_Delta.
void validate_word(const MorphismRegistry &reg, const LocalizationWord &w);

// Applies the three displayed rewriting rules to a fixpoint: compose
// adjacent forward letters, cancel X^-1 X and X X^-1 with the same
// reference. Word equality beyond these rules is out of scope.
LocalizationWord reduce_word(MorphismRegistry &reg, const LocalizationWord &w);

// Descriptor of the gapped realization: parameter cube [a,b]^N with torus
// radii r^2(alpha) = alpha(1-alpha) - c. InfeasibleLocus when empty.
summing::RealizationDescriptor gapped_realization_descriptor(std::size_t n,
                                                             double beta,
                                                             double delta);

// Stratum of an alpha vector inside the gapped locus; NotSubset when a
// coordinate leaves [alpha_lo, alpha_hi].
int gapped_stratum_of(const GapLocus &locus, const std::vector<double> &alpha,
                      double tol = 1e-12);

} // namespace gammacat::gapped

#endif
