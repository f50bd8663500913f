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

#ifndef GAMMACAT_QUANTUM_HPP
#define GAMMACAT_QUANTUM_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gammacat/pointed.hpp"
#include "gammacat/rational.hpp"
#include "gammacat/summing.hpp"

namespace gammacat::quantum {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kSpectralTol = 1e-9;

struct DensityMatrix {
  CMatrix rho;
  std::vector<double> eigenvalues; // ascending

  Eigen::Index dim() const { return rho.rows(); }
};

// Hermitian within tol (then symmetrized), PSD within tol, unit trace.
// Errors: NotHermitian, NotPSD, TraceNotOne.
DensityMatrix validate_density(const CMatrix &m, double tol = kSpectralTol);

// A channel is stored through its Choi matrix with the index convention
//   J[(i,a), (j,b)] = S_{ab -> ij},   (i,a) flattened as i*dim_in + a,
// where S is the transfer tensor acting by rho'_ij = sum S_{ab->ij} rho_ab.
// CP <=> J is PSD; TP <=> the partial trace over the output index is the
// identity: sum_i J[(i,a),(i,b)] = delta_ab.
struct QuantumChannel {
  Eigen::Index dim_in = 0;
  Eigen::Index dim_out = 0;
  CMatrix choi;
  std::vector<CMatrix> kraus; // possibly empty until factorized

  Complex transfer(Eigen::Index a, Eigen::Index b, Eigen::Index i,
                   Eigen::Index j) const {
    return choi(i * dim_in + a, j * dim_in + b);
  }
  CMatrix apply(const CMatrix &rho) const;
};

QuantumChannel channel_from_kraus(const std::vector<CMatrix> &kraus,
                                  double tol = kSpectralTol);
// Eigendecomposes the Choi matrix into Kraus operators. NotCP / NotTP.
QuantumChannel channel_from_choi(Eigen::Index dim_in, Eigen::Index dim_out,
                                 const CMatrix &choi,
                                 double tol = kSpectralTol);
QuantumChannel identity_channel(Eigen::Index dim);
QuantumChannel compose(const QuantumChannel &second,
                       const QuantumChannel &first);

// Objects of the quantum probabilistic category over pointed sets: an N x N
// array of pairs of pointed sets (carried opaquely as basepoint-pattern
// labels) with a density matrix of matching dimension.
struct QcObject {
  std::vector<std::string> entry_labels; // length N, label of the a-th state
  DensityMatrix rho;
};

struct QcCoproduct {
  QcObject object;             // pairs wedge-combined, rho (x) rho'
  QuantumChannel in_left;      // rho |-> rho (x) rho'
  QuantumChannel in_right;     // rho' |-> rho (x) rho'
  // copair transfer tensor: entries T[(i,a)(j,b) -> u,s]; not CPTP in
  // general, stored as a raw Choi-layout matrix
  CMatrix copair;
  Eigen::Index copair_dim_in = 0;
  Eigen::Index copair_dim_out = 0;
};

// Coproduct with the two-branch copair built from channels
// phi1 : rho -> rho~ and phi2 : rho' -> rho~ (a common target).
QcCoproduct qc_coproduct(const QcObject &a, const QcObject &b,
                         const QuantumChannel &phi1,
                         const QuantumChannel &phi2, const CMatrix &target,
                         double tol = kSpectralTol);

// Kronecker product helper (row-major pairing, (i,a) = i*cols2 + a).
CMatrix kron(const CMatrix &a, const CMatrix &b);

// apply a raw transfer tensor in Choi layout to a state
CMatrix apply_transfer(const CMatrix &choi_layout, Eigen::Index dim_in,
                       Eigen::Index dim_out, const CMatrix &rho);

//===========================================================================
// Quantum summing functors
//===========================================================================

// (alpha, theta) with |theta_x|^2 <= alpha_x (1 - alpha_x) per coordinate.
// alpha is kept rational so the diagonal of the evaluated state matches the
// classical pattern weights exactly.
struct QuantumSummingFunctor {
  RationalVector alpha;
  std::vector<Complex> theta;

  std::size_t points() const { return alpha.size(); }
};

// AnnulusViolated(coordinate) when the disk constraint fails.
QuantumSummingFunctor make_quantum_summing(RationalVector alpha,
                                           std::vector<Complex> theta,
                                           double tol = 1e-12);

// The one-site state rho^(x) = [[alpha, theta], [conj theta, 1-alpha]].
CMatrix site_state(const QuantumSummingFunctor &f, std::size_t x);

struct QuantumEvaluation {
  QcObject object;          // 2^|A| labels, rho_A = tensor of site states
  RationalVector diagonal;  // exact diagonal of rho_A (classical weights)
};
QuantumEvaluation quantum_evaluate(const QuantumSummingFunctor &f,
                                   std::uint32_t mask);

struct LocalUnitaryResult {
  std::vector<double> alpha;
  std::vector<Complex> theta;
  bool annulus_ok = true;
};
// Conjugates each site state by the given 2x2 unitaries. NotUnitary.
LocalUnitaryResult local_unitary_act(const std::vector<CMatrix> &unitaries,
                                     const QuantumSummingFunctor &f,
                                     double tol = kSpectralTol);

// Strata j = 0..N with stabilizers U(2)^j (x) (U(1)xU(1))^(N-j); includes
// the per-alpha annulus/disk classification of the theta constraint.
summing::RealizationDescriptor quantum_strata_descriptor(std::size_t n);

// Number of coordinates equal to 1/2 (the stratum index of alpha).
int stratum_of(const RationalVector &alpha);

// Outer and (formal) inner radius squared of the theta constraint at alpha;
// the inner bound alpha(1-alpha) - 1/4 is never positive on [0,1] and is
// reported clamped at zero.
struct ThetaBounds {
  double outer_sq = 0.0;
  double inner_sq = 0.0;
  std::string shape; // always "disk"
};
ThetaBounds theta_bounds(double alpha);

//===========================================================================
// Decoherence (Segre) coproduct
//===========================================================================

struct SegreObject {
  std::vector<std::string> labels;
  std::vector<Complex> z; // projective coordinates, not all zero
};

// z''_(i,j) = z_i z'_j with componentwise wedge labels; observation
// probabilities |z|^2 / ||z||^2 multiply. ZeroVector on zero input.
SegreObject segre_coproduct(const SegreObject &a, const SegreObject &b);
std::vector<double> observation_probabilities(const SegreObject &a);

} // namespace gammacat::quantum

#endif
