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

#include "entit/gaussian.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace entit {

Eigen::MatrixXd symplectic_form(int n_modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

namespace {

std::vector<double> symplectic_spectrum(const Eigen::MatrixXd& sigma) {
  const int n = static_cast<int>(sigma.rows()) / 2;
  Eigen::MatrixXd omega_sigma = symplectic_form(n) * sigma;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(omega_sigma, false);
  std::vector<double> moduli(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < 2 * n; ++k) {
    moduli[static_cast<std::size_t>(k)] = std::abs(solver.eigenvalues()(k));
  }
  std::sort(moduli.begin(), moduli.end());
  return moduli;
}

}  // namespace

void check_covariance(const Eigen::MatrixXd& sigma, double tol) {
  if (sigma.rows() != sigma.cols() || sigma.rows() % 2 != 0) {
    throw std::invalid_argument("covariance matrix must be square 2n x 2n");
  }
  const double asym = (sigma - sigma.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol) {
    throw std::invalid_argument("covariance matrix is not symmetric (max |A - A^T| = " +
                                std::to_string(asym) + ")");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("covariance matrix is not positive definite");
  }
  for (double nu : symplectic_spectrum(sigma)) {
    if (nu < 0.5 - tol) {
      throw std::invalid_argument("uncertainty relation violated: symplectic eigenvalue " +
                                  std::to_string(nu) + " < 1/2");
    }
  }
}

Eigen::Matrix4d twb_covariance(double r) {
  const double c = std::cosh(2.0 * r) / 2.0;
  const double s = std::sinh(2.0 * r) / 2.0;
  Eigen::Matrix4d sigma = Eigen::Matrix4d::Zero();
  sigma.diagonal().setConstant(c);
  // Correlations carry the x-x / p-p sign split of sigma_z.
  sigma(0, 2) = sigma(2, 0) = s;
  sigma(1, 3) = sigma(3, 1) = -s;
  return sigma;
}

Eigen::MatrixXd four_mode_input_covariance(double r, double s) {
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(8, 8);
  sigma.topLeftCorner<4, 4>() = twb_covariance(r);
  sigma.bottomRightCorner<4, 4>() = twb_covariance(s);
  return sigma;
}

Eigen::MatrixXd bs_pair_symplectic(double phi, double psi) {
  const double cf = std::cos(phi), sf = std::sin(phi);
  const double cp = std::cos(psi), sp = std::sin(psi);
  // Mode-level mixing matrix; modes (1,4) rotate by phi, modes (2,3) by psi.
  Eigen::Matrix4d mode;
  mode << cf, 0.0, 0.0, sf,
          0.0, cp, sp, 0.0,
          0.0, -sp, cp, 0.0,
          -sf, 0.0, 0.0, cf;
  Eigen::MatrixXd s_map = Eigen::MatrixXd::Zero(8, 8);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      s_map.block<2, 2>(2 * i, 2 * j) = mode(i, j) * Eigen::Matrix2d::Identity();
    }
  }
  return s_map;
}

Eigen::MatrixXd evolve_covariance(const Eigen::MatrixXd& sigma,
                                  const Eigen::MatrixXd& s_map) {
  if (sigma.rows() != s_map.rows() || sigma.cols() != s_map.cols()) {
    throw std::invalid_argument("covariance/symplectic dimension mismatch");
  }
  Eigen::MatrixXd out = s_map.transpose() * sigma * s_map;
  return 0.5 * (out + out.transpose());
}

Eigen::Matrix4d reduce(const Eigen::MatrixXd& sigma, std::pair<int, int> kept) {
  if (sigma.rows() != 8 || sigma.cols() != 8) {
    throw std::invalid_argument("reduce expects a four-mode covariance matrix");
  }
  const int h = kept.first, k = kept.second;
  if (h < 1 || h > 4 || k < 1 || k > 4 || h == k) {
    throw std::invalid_argument("kept mode indices must be distinct and in 1..4");
  }
  Eigen::Matrix4d out;
  const int rows[2] = {h - 1, k - 1};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = sigma.block<2, 2>(2 * rows[i], 2 * rows[j]);
    }
  }
  return out;
}

double min_symplectic_eigenvalue(const Eigen::MatrixXd& sigma) {
  return symplectic_spectrum(sigma).front();
}

double min_ppt_symplectic_eigenvalue(const Eigen::Matrix4d& sigma) {
  Eigen::LLT<Eigen::Matrix4d> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("covariance matrix is not positive definite");
  }
  // Partial transposition flips the momentum of the second kept mode.
  Eigen::Vector4d flip(1.0, 1.0, 1.0, -1.0);
  Eigen::Matrix4d tilde = flip.asDiagonal() * sigma * flip.asDiagonal();
  return min_symplectic_eigenvalue(tilde);
}

double purity(const Eigen::Matrix4d& sigma) {
  const double det = sigma.determinant();
  if (det <= 0.0) {
    throw std::invalid_argument("covariance determinant must be positive");
  }
  return 1.0 / std::sqrt(16.0 * det);
}

bool is_pure(const Eigen::Matrix4d& sigma, double tol) {
  return std::abs(purity(sigma) - 1.0) <= tol;
}

double entanglement_of_formation(double kappa_minus) {
  if (kappa_minus <= 0.0) {
    throw std::invalid_argument("PPT symplectic eigenvalue must be positive");
  }
  if (kappa_minus >= 0.5) {
    return 0.0;
  }
  // chi - 1/2 = (kappa - 1/2)^2 / (2 kappa): evaluated in this form it
  // stays non-negative all the way to the separability boundary, where the
  // naive (kappa^2 + 1/4) / (2 kappa) - 1/2 cancels to rounding noise.
  const double delta = (kappa_minus - 0.5) * (kappa_minus - 0.5) / (2.0 * kappa_minus);
  if (delta == 0.0) return 0.0;
  return (delta + 1.0) * std::log1p(delta) - delta * std::log(delta);
}

double gaussian_fidelity(const Eigen::Matrix4d& sigma_a,
                         const Eigen::Matrix4d& sigma_b,
                         bool* outside_validity) {
  if (outside_validity != nullptr) {
    *outside_validity = !is_pure(sigma_a) && !is_pure(sigma_b);
  }
  const double det = (sigma_a + sigma_b).determinant();
  if (det <= 0.0) {
    throw std::runtime_error("singular covariance sum in fidelity");
  }
  return 1.0 / std::sqrt(det);
}

}  // namespace entit
