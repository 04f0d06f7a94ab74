// Copyright 2026 The entit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

// Exact truncated Fock-space simulator of the four-mode beam-splitter
// network.  It is the brute-force counterpart of the Gaussian engine: the
// two are developed independently and cross-checked against each other.
//
// Mode layout: tensor index (n, m, h, k) holds the occupations of modes
// (1, 2, 3, 4).  The first beam splitter couples modes (1, 4) with angle
// phi, the second couples modes (2, 3) with angle psi.  The sign
// convention matches the symplectic map of gaussian.hpp: in the
// Heisenberg picture a1 -> a1 cos(phi) - a4 sin(phi) and
// a4 -> a1 sin(phi) + a4 cos(phi) (same pattern for the (2,3) pair).
namespace entit {

// Two-mode amplitude table psi_{n,m}, 0 <= n,m <= cutoff.
struct TwoModeAmplitudes {
  int cutoff = 0;
  Eigen::MatrixXcd amps;       // (cutoff+1) x (cutoff+1)
  double truncation_tail = 0;  // analytic weight beyond the cutoff, when known

  double norm() const;
  TwoModeAmplitudes normalized() const;
  // True when the table is diagonal (photon-number-entangled form
  // psi_{n,m} = delta_{nm} psi_n) within tol.
  bool is_photon_number_entangled(double tol = 1e-12) const;
};

// Two-mode squeezed vacuum amplitudes psi_n = sqrt(1 - lambda^2) lambda^n
// on the diagonal, lambda = tanh(r).  The weight left beyond the cutoff,
// lambda^{2(cutoff+1)}, is recorded in truncation_tail.
TwoModeAmplitudes twb_fock(double r, int cutoff);

// Vacuum amplitude table (psi_{0,0} = 1).
TwoModeAmplitudes vacuum_two_mode(int cutoff);

// Inner product <a|b> of two equal-cutoff amplitude tables.
std::complex<double> overlap_two_mode(const TwoModeAmplitudes& a,
                                      const TwoModeAmplitudes& b);

// Four-mode pure state as a rank-4 amplitude tensor.
struct FockTensor4 {
  int cutoff = 0;
  std::vector<std::complex<double>> amps;  // row-major over (n, m, h, k)
  double truncation_loss = 0;              // weight discarded by preparation steps

  int dim() const { return cutoff + 1; }
  std::size_t index(int n, int m, int h, int k) const {
    const std::size_t d = static_cast<std::size_t>(dim());
    return ((static_cast<std::size_t>(n) * d + static_cast<std::size_t>(m)) * d +
            static_cast<std::size_t>(h)) * d + static_cast<std::size_t>(k);
  }
  std::complex<double>& at(int n, int m, int h, int k) { return amps[index(n, m, h, k)]; }
  const std::complex<double>& at(int n, int m, int h, int k) const {
    return amps[index(n, m, h, k)];
  }
  double norm() const;
  FockTensor4& normalize();
};

// Tensor product: amplitudes a_{n,m} b_{h,k} with a on modes (1,2) and b
// on modes (3,4).  Throws std::invalid_argument on cutoff mismatch.
FockTensor4 product_state(const TwoModeAmplitudes& a, const TwoModeAmplitudes& b);

// Tensor product with the crossed pairing: a on modes (1,3), b on (2,4);
// the amplitude of |n, m, h, k> is a_{n,h} b_{m,k}.  Used to build
// reference states for the entanglement-swapping checks.
FockTensor4 product_state_13_24(const TwoModeAmplitudes& a, const TwoModeAmplitudes& b);

// Total weight sitting in truncated joint-excitation sectors, i.e. on
// amplitudes with n + k > cutoff or m + h > cutoff.  The beam-splitter
// layer conserves the pair excitations n + k and m + h, so this is
// exactly the weight whose evolution the truncated simulator cannot
// represent faithfully.
double incomplete_pair_sector_weight(const FockTensor4& state);

// Preparation step for exact evolution at finite cutoff: zeroes every
// amplitude with n + k > cutoff or m + h > cutoff and renormalises.  The
// discarded weight is added to truncation_loss (and reported through
// *dropped when non-null).  On the retained sectors the beam-splitter
// layer is then exactly unitary.
FockTensor4 restrict_pair_excitation(const FockTensor4& state, double* dropped = nullptr);

enum class BsMethod {
  kCoefficientFormula,  // explicit matrix elements from the binomial expansion
  kExponential,         // matrix exponential of the per-sector generator
};

// Applies the two-beam-splitter layer U_14(phi) U_23(psi).  Both methods
// work sector by sector (the pair excitations n + k and m + h are
// conserved), so no weight ever leaks past the cutoff from a complete
// sector.  If the input carries more than overflow_tol weight in
// truncated sectors -- amplitudes that would need states beyond the
// cutoff -- the call is rejected with std::runtime_error ("cutoff
// overflow").  Use restrict_pair_excitation to prepare inputs with
// guaranteed headroom.
FockTensor4 apply_bs_pair_fock(const FockTensor4& state, double phi, double psi,
                               BsMethod method, double overflow_tol = 1e-6);

// Full inner product <a|b>.  Throws std::invalid_argument on cutoff mismatch.
std::complex<double> overlap(const FockTensor4& a, const FockTensor4& b);

// Reduced state of a kept mode pair: density matrix, quadrature means and
// covariance matrix (same conventions as gaussian.hpp).  The reduction
// trace-normalises, so the moments refer to the normalised state.
struct ReducedPair {
  std::pair<int, int> kept;
  int cutoff = 0;
  Eigen::MatrixXcd rho;   // (cutoff+1)^2 square, trace 1
  Eigen::Vector4d mean;
  Eigen::Matrix4d cov;

  // <psi|rho|psi> against a pure two-mode reference (fidelity oracle).
  double pure_overlap(const TwoModeAmplitudes& psi) const;
};

// Traces out the two modes not in `kept` (1-based, distinct indices) and
// computes the second moments of the remaining pair.
ReducedPair reduced_moments(const FockTensor4& state, std::pair<int, int> kept);

// Residual |LHS - RHS| of the single transparency condition on the
// (1,1,1,1) output amplitude, evaluated from the input amplitudes with
// indices in {0,1,2} only:
//   psi_11 om_11 = cos(2phi) cos(2psi) psi_11 om_11
//     + cos(2phi) sin(2psi)/sqrt(2) (psi_10 om_21 - psi_12 om_01)
//     + sin(2phi) cos(2psi)/sqrt(2) (psi_01 om_12 - psi_21 om_10)
//     + sin(2phi) sin(2psi)/2 (psi_22 om_00 - psi_02 om_02
//                              - psi_20 om_20 + psi_00 om_22).
// Zero iff the condition holds.  Requires cutoff >= 2.
double transparency_residual_1111(const TwoModeAmplitudes& a,
                                  const TwoModeAmplitudes& b,
                                  double phi, double psi);

// Residual of the transparency condition specialised to
// photon-number-entangled inputs (diagonal amplitudes psi_n, omega_n):
//   |psi_1 om_1 - cos(2phi) cos(2psi) psi_1 om_1
//    - sin(2phi) sin(2psi)/2 (psi_2 om_0 + psi_0 om_2)|.
// For geometric amplitudes lambda^n this equals
// lambda^2 |1 - cos 2(phi - psi)|.  Requires at least 3 entries each.
double pnes_residual(const Eigen::VectorXcd& psi_diag,
                     const Eigen::VectorXcd& omega_diag,
                     double phi, double psi);

// Debug dump: one CSV row "n,m,h,k,re,im" per amplitude.
std::string dump_amplitudes_csv(const FockTensor4& state);

}  // namespace entit
