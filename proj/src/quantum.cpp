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

#include "gammacat/quantum.hpp"

#include <cmath>

namespace gammacat::quantum {

namespace {

double hermitian_defect(const CMatrix &m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

} // namespace

DensityMatrix validate_density(const CMatrix &m, double tol) {
  if (m.rows() != m.cols()) fail("DimensionMismatch", "matrix is not square");
  double defect = hermitian_defect(m);
  if (defect > tol)
    fail("NotHermitian", "||rho - rho^*||_inf = " + std::to_string(defect));
  CMatrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -tol)
    fail("NotPSD", "minimal eigenvalue " + std::to_string(min_eig));
  double trace = h.trace().real();
  if (std::abs(trace - 1.0) > tol)
    fail("TraceNotOne", "trace is " + std::to_string(trace));
  DensityMatrix d;
  d.rho = std::move(h);
  d.eigenvalues.assign(solver.eigenvalues().data(),
                       solver.eigenvalues().data() + solver.eigenvalues().size());
  return d;
}

CMatrix QuantumChannel::apply(const CMatrix &rho) const {
  return apply_transfer(choi, dim_in, dim_out, rho);
}

CMatrix apply_transfer(const CMatrix &choi_layout, Eigen::Index dim_in,
                       Eigen::Index dim_out, const CMatrix &rho) {
  CMatrix out = CMatrix::Zero(dim_out, dim_out);
  for (Eigen::Index i = 0; i < dim_out; ++i)
    for (Eigen::Index j = 0; j < dim_out; ++j)
      for (Eigen::Index a = 0; a < dim_in; ++a)
        for (Eigen::Index b = 0; b < dim_in; ++b)
          out(i, j) += choi_layout(i * dim_in + a, j * dim_in + b) * rho(a, b);
  return out;
}

namespace {

void check_tp(const QuantumChannel &c, double tol) {
  for (Eigen::Index a = 0; a < c.dim_in; ++a)
    for (Eigen::Index b = 0; b < c.dim_in; ++b) {
      Complex s = 0;
      for (Eigen::Index i = 0; i < c.dim_out; ++i)
        s += c.choi(i * c.dim_in + a, i * c.dim_in + b);
      Complex want = a == b ? Complex(1, 0) : Complex(0, 0);
      if (std::abs(s - want) > tol)
        fail("NotTP", "partial trace of the Choi matrix is not the identity");
    }
}

} // namespace

QuantumChannel channel_from_kraus(const std::vector<CMatrix> &kraus,
                                  double tol) {
  if (kraus.empty()) fail("DimensionMismatch", "no Kraus operators");
  const Eigen::Index dout = kraus[0].rows(), din = kraus[0].cols();
  QuantumChannel c;
  c.dim_in = din;
  c.dim_out = dout;
  c.choi = CMatrix::Zero(dout * din, dout * din);
  for (const auto &k : kraus) {
    if (k.rows() != dout || k.cols() != din)
      fail("DimensionMismatch", "Kraus operators have mixed shapes");
    CVector v(dout * din);
    for (Eigen::Index i = 0; i < dout; ++i)
      for (Eigen::Index a = 0; a < din; ++a) v(i * din + a) = k(i, a);
    c.choi += v * v.adjoint();
  }
  c.kraus = kraus;
  check_tp(c, tol);
  return c;
}

QuantumChannel channel_from_choi(Eigen::Index dim_in, Eigen::Index dim_out,
                                 const CMatrix &choi, double tol) {
  if (choi.rows() != dim_in * dim_out || choi.cols() != dim_in * dim_out)
    fail("DimensionMismatch", "Choi matrix has wrong shape");
  double defect = hermitian_defect(choi);
  if (defect > tol)
    fail("NotCP", "Choi matrix is not Hermitian (defect " +
                      std::to_string(defect) + ")");
  CMatrix h = (choi + choi.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -tol)
    fail("NotCP", "Choi matrix has negative eigenvalue " +
                      std::to_string(min_eig));
  QuantumChannel c;
  c.dim_in = dim_in;
  c.dim_out = dim_out;
  c.choi = h;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    double lam = solver.eigenvalues()(k);
    if (lam <= tol) continue;
    CMatrix a(dim_out, dim_in);
    for (Eigen::Index i = 0; i < dim_out; ++i)
      for (Eigen::Index x = 0; x < dim_in; ++x)
        a(i, x) = std::sqrt(lam) * solver.eigenvectors()(i * dim_in + x, k);
    c.kraus.push_back(std::move(a));
  }
  check_tp(c, tol);
  return c;
}

QuantumChannel identity_channel(Eigen::Index dim) {
  return channel_from_kraus({CMatrix::Identity(dim, dim)});
}

QuantumChannel compose(const QuantumChannel &second,
                       const QuantumChannel &first) {
  if (first.dim_out != second.dim_in)
    fail("DimensionMismatch", "channels are not composable");
  QuantumChannel c;
  c.dim_in = first.dim_in;
  c.dim_out = second.dim_out;
  c.choi = CMatrix::Zero(c.dim_out * c.dim_in, c.dim_out * c.dim_in);
  for (Eigen::Index i = 0; i < c.dim_out; ++i)
    for (Eigen::Index j = 0; j < c.dim_out; ++j)
      for (Eigen::Index a = 0; a < c.dim_in; ++a)
        for (Eigen::Index b = 0; b < c.dim_in; ++b) {
          Complex s = 0;
          for (Eigen::Index p = 0; p < first.dim_out; ++p)
            for (Eigen::Index q = 0; q < first.dim_out; ++q)
              s += second.transfer(p, q, i, j) * first.transfer(a, b, p, q);
          c.choi(i * c.dim_in + a, j * c.dim_in + b) = s;
        }
  return c;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

QcCoproduct qc_coproduct(const QcObject &a, const QcObject &b,
                         const QuantumChannel &phi1,
                         const QuantumChannel &phi2, const CMatrix &target,
                         double tol) {
  const Eigen::Index n = a.rho.dim(), m = b.rho.dim();
  const Eigen::Index t = target.rows();
  if (phi1.dim_in != n || phi2.dim_in != m || phi1.dim_out != t ||
      phi2.dim_out != t)
    fail("DimensionMismatch", "coproduct channels have wrong dimensions");

  QcCoproduct out;
  out.object.rho = validate_density(kron(a.rho.rho, b.rho.rho), tol);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      out.object.entry_labels.push_back(a.entry_labels[i] + "v" +
                                        b.entry_labels[j]);

  // injections Psi(rho) = rho (x) rho', Psi'(rho') = rho (x) rho'
  const Eigen::Index big = n * m;
  CMatrix inl = CMatrix::Zero(big * n, big * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index x = 0; x < m; ++x)
        for (Eigen::Index y = 0; y < m; ++y)
          inl((i * m + x) * n + i, (j * m + y) * n + j) += b.rho.rho(x, y);
  CMatrix inr = CMatrix::Zero(big * m, big * m);
  for (Eigen::Index x = 0; x < m; ++x)
    for (Eigen::Index y = 0; y < m; ++y)
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
          inr((i * m + x) * m + x, (j * m + y) * m + y) += a.rho.rho(i, j);
  out.in_left = channel_from_choi(n, big, inl, tol);
  out.in_right = channel_from_choi(m, big, inr, tol);

  // two-branch copair in transfer layout
  out.copair_dim_in = big;
  out.copair_dim_out = t;
  out.copair = CMatrix::Zero(t * big, t * big);
  for (Eigen::Index u = 0; u < t; ++u)
    for (Eigen::Index s = 0; s < t; ++s) {
      const Complex rho_us = target(u, s);
      const bool zero_entry = std::abs(rho_us) == 0.0;
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
          for (Eigen::Index x = 0; x < m; ++x)
            for (Eigen::Index y = 0; y < m; ++y) {
              Complex v;
              if (zero_entry)
                v = phi1.transfer(i, j, u, s) * (x == y ? 1.0 : 0.0) +
                    phi2.transfer(x, y, u, s) * (i == j ? 1.0 : 0.0);
              else
                v = phi1.transfer(i, j, u, s) * phi2.transfer(x, y, u, s) /
                    rho_us;
              out.copair(u * big + (i * m + x), s * big + (j * m + y)) = v;
            }
    }
  return out;
}

//===========================================================================
// Quantum summing functors
//===========================================================================

QuantumSummingFunctor make_quantum_summing(RationalVector alpha,
                                           std::vector<Complex> theta,
                                           double tol) {
  if (alpha.size() != theta.size())
    fail("DimensionMismatch", "alpha and theta have different lengths");
  for (std::size_t x = 0; x < alpha.size(); ++x) {
    if (!is_zero_one_range(alpha[x]))
      fail("NegativeEntry", "alpha outside [0,1] at coordinate " +
                                std::to_string(x));
    double av = rat_double(alpha[x]);
    if (std::norm(theta[x]) > av * (1.0 - av) + tol)
      fail("AnnulusViolated",
           "coordinate " + std::to_string(x) + ": |theta|^2 = " +
               std::to_string(std::norm(theta[x])) + " > alpha(1-alpha) = " +
               std::to_string(av * (1.0 - av)));
  }
  return QuantumSummingFunctor{std::move(alpha), std::move(theta)};
}

CMatrix site_state(const QuantumSummingFunctor &f, std::size_t x) {
  CMatrix rho(2, 2);
  double a = rat_double(f.alpha.at(x));
  rho(0, 0) = a;
  rho(0, 1) = f.theta[x];
  rho(1, 0) = std::conj(f.theta[x]);
  rho(1, 1) = 1.0 - a;
  return rho;
}

QuantumEvaluation quantum_evaluate(const QuantumSummingFunctor &f,
                                   std::uint32_t mask) {
  std::vector<std::size_t> pts;
  for (std::size_t x = 0; x < f.points(); ++x)
    if (mask & (std::uint32_t(1) << x)) pts.push_back(x);
  QuantumEvaluation out;
  // bit r of a state index is the r-th point of A, matching the pattern
  // order of classical_evaluate (set bit = the point keeps its own element)
  CMatrix rho = CMatrix::Identity(1, 1);
  RationalVector diag{Rational(1)};
  for (auto x : pts) {
    rho = kron(site_state(f, x), rho);
    RationalVector next;
    next.reserve(diag.size() * 2);
    for (const auto &d : diag) next.push_back(d * f.alpha[x]);
    for (const auto &d : diag) next.push_back(d * (1 - f.alpha[x]));
    diag = std::move(next);
  }
  out.object.rho = validate_density(rho, 1e-9);
  out.diagonal = std::move(diag);
  const std::size_t n = pts.size();
  for (std::uint32_t pattern = 0; pattern < (std::uint32_t(1) << n);
       ++pattern) {
    std::string label = "w";
    for (std::size_t r = 0; r < n; ++r)
      label += (pattern & (std::uint32_t(1) << r)) ? '1' : '0';
    out.object.entry_labels.push_back(label);
  }
  return out;
}

LocalUnitaryResult local_unitary_act(const std::vector<CMatrix> &unitaries,
                                     const QuantumSummingFunctor &f,
                                     double tol) {
  if (unitaries.size() != f.points())
    fail("DimensionMismatch", "one unitary per coordinate required");
  LocalUnitaryResult out;
  for (std::size_t x = 0; x < f.points(); ++x) {
    const CMatrix &u = unitaries[x];
    if (u.rows() != 2 || u.cols() != 2 ||
        (u.adjoint() * u - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() >
            tol)
      fail("NotUnitary", "matrix " + std::to_string(x) + " is not 2x2 unitary");
    CMatrix rho = u * site_state(f, x) * u.adjoint();
    double a = rho(0, 0).real();
    out.alpha.push_back(a);
    out.theta.push_back(rho(0, 1));
    if (std::norm(rho(0, 1)) > a * (1.0 - a) + tol) out.annulus_ok = false;
  }
  return out;
}

summing::RealizationDescriptor quantum_strata_descriptor(std::size_t n) {
  summing::RealizationDescriptor d;
  d.kind = summing::RealizationDescriptor::Kind::QuantumAnnulus;
  d.n = n;
  d.ambient = "union over Z in [0,1]^" + std::to_string(n) +
              " and k of I_Z^k x A_k, with A_k a product of " +
              "theta disks |theta|^2 <= alpha(1-alpha)";
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
        "alpha sequences with " + std::to_string(j) +
            " coordinates equal to 1/2"});
  }
  return d;
}

int stratum_of(const RationalVector &alpha) {
  int j = 0;
  for (const auto &a : alpha)
    if (a == Rational(1, 2)) ++j;
  return j;
}

ThetaBounds theta_bounds(double alpha) {
  ThetaBounds b;
  b.outer_sq = alpha * (1.0 - alpha);
  b.inner_sq = std::max(0.0, alpha * (1.0 - alpha) - 0.25);
  b.shape = "disk";
  return b;
}

//===========================================================================
// Segre coproduct
//===========================================================================

SegreObject segre_coproduct(const SegreObject &a, const SegreObject &b) {
  auto is_zero = [](const std::vector<Complex> &z) {
    for (const auto &c : z)
      if (std::abs(c) > 0) return false;
    return true;
  };
  if (a.z.empty() || b.z.empty() || is_zero(a.z) || is_zero(b.z))
    fail("ZeroVector", "projective coordinates must be nonzero");
  SegreObject out;
  for (std::size_t i = 0; i < a.z.size(); ++i)
    for (std::size_t j = 0; j < b.z.size(); ++j) {
      out.labels.push_back(a.labels.at(i) + "v" + b.labels.at(j));
      out.z.push_back(a.z[i] * b.z[j]);
    }
  return out;
}

std::vector<double> observation_probabilities(const SegreObject &a) {
  double total = 0;
  for (const auto &c : a.z) total += std::norm(c);
  std::vector<double> out;
  for (const auto &c : a.z) out.push_back(std::norm(c) / total);
  return out;
}

} // namespace gammacat::quantum
