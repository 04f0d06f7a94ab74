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
#include <utility>

// Exact Gaussian-state engine for the four-mode beam-splitter network.
//
// Conventions used throughout:
//   * quadrature ordering (x1, p1, x2, p2, ...), vacuum variance 1/2
//     (x = (a + a^dag)/sqrt(2));
//   * the symplectic form is Omega = direct sum of [[0, 1], [-1, 0]];
//   * a symplectic map S acts on covariance matrices by congruence,
//     Sigma -> S^T Sigma S.
namespace entit {

// Symplectic form for n modes in (x1, p1, x2, p2, ...) ordering.
Eigen::MatrixXd symplectic_form(int n_modes);

// Throws std::invalid_argument unless sigma is a physical covariance
// matrix: symmetric within tol, positive definite, and with every
// symplectic eigenvalue >= 1/2 - tol.
void check_covariance(const Eigen::MatrixXd& sigma, double tol = 1e-12);

// Covariance matrix of a two-mode squeezed vacuum with squeezing r:
// diagonal blocks cosh(2r)/2 * I2, off-diagonal blocks sinh(2r)/2 * sigma_z,
// placed symmetrically.
Eigen::Matrix4d twb_covariance(double r);

// Block-diagonal four-mode input: twb(r) on modes (1,2), twb(s) on (3,4).
Eigen::MatrixXd four_mode_input_covariance(double r, double s);

// Symplectic map of the two-beam-splitter layer: modes (1,4) are mixed
// with angle phi (transmissivity cos^2 phi) and modes (2,3) with angle
// psi.  Every 2x2 block is a scalar multiple of I2.
Eigen::MatrixXd bs_pair_symplectic(double phi, double psi);

// Congruence transform S^T Sigma S (the result is re-symmetrised to kill
// floating-point asymmetry).  Throws std::invalid_argument on dimension
// mismatch.
Eigen::MatrixXd evolve_covariance(const Eigen::MatrixXd& sigma,
                                  const Eigen::MatrixXd& s_map);

// Two-mode restriction of a four-mode covariance matrix: keeps the 2x2
// blocks of the (1-based, distinct) mode pair.  Throws on bad indices.
Eigen::Matrix4d reduce(const Eigen::MatrixXd& sigma,
                       std::pair<int, int> kept);

// Smallest symplectic eigenvalue of a covariance matrix (moduli of the
// eigenvalues of Omega * Sigma).
double min_symplectic_eigenvalue(const Eigen::MatrixXd& sigma);

// Smallest symplectic eigenvalue of the partially transposed two-mode
// covariance matrix (momentum sign flip on the second kept mode).  The
// state is separable across the pair iff the result is >= 1/2.  Throws
// std::invalid_argument if sigma is not positive definite.
double min_ppt_symplectic_eigenvalue(const Eigen::Matrix4d& sigma);

// Purity mu = (16 Det Sigma)^{-1/2} of a two-mode covariance matrix.
// Throws std::invalid_argument on a non-positive determinant.
double purity(const Eigen::Matrix4d& sigma);

// True when purity(sigma) is within tol of 1.
bool is_pure(const Eigen::Matrix4d& sigma, double tol = 1e-9);

// Entanglement of formation (in nats) of a symmetric two-mode Gaussian
// state with PPT eigenvalue kappa: zero in the separable regime
// kappa >= 1/2, otherwise
//   E_f = (chi + 1/2) ln(chi + 1/2) - (chi - 1/2) ln(chi - 1/2)
// with chi = (kappa^2 + 1/4) / (2 kappa).  Throws on kappa <= 0.
double entanglement_of_formation(double kappa_minus);

// Gaussian fidelity F = (Det[Sigma_a + Sigma_b])^{-1/2} between two
// zero-mean two-mode states.  The formula is exact when at least one
// state is pure; when neither is, *outside_validity (if non-null) is set
// to true as a warning and the value is still returned.  Throws
// std::runtime_error when the sum matrix is singular.
double gaussian_fidelity(const Eigen::Matrix4d& sigma_a,
                         const Eigen::Matrix4d& sigma_b,
                         bool* outside_validity = nullptr);

}  // namespace entit
