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
#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

// Qubit analogue of the transparency network: four qubits, pair states on
// (1,2) and (3,4), commuting two-qubit unitaries
//   U(theta) = exp(-i sum_k theta_k sigma_k (x) sigma_k),   sigma_0 = 1,
// applied to qubits (1,4) with angles theta and to (2,3) with angles phi.
// Choosing phi = -theta inverts the action remotely through the shared
// entanglement; which pair states allow that, and under which constraints
// on theta, is catalogued by the zoology routines.
//
// Bell-state indexing used throughout: 0 -> Phi+ = (|00> + |11>)/sqrt(2),
// 1 -> Psi+ = (|01> + |10>)/sqrt(2), 2 -> Psi- = (|01> - |10>)/sqrt(2),
// 3 -> Phi- = (|00> - |11>)/sqrt(2).  Basis order within a pair or the
// four-qubit register is big-endian: |b1 b2 b3 b4>.
namespace entit {

using PauliAngles = std::array<double, 4>;

Eigen::Matrix2cd pauli(int k);  // sigma_0 .. sigma_3

Eigen::Vector4cd bell_state(int j);

// Phases mu_j with U(theta) |B_j> = exp(-i mu_j) |B_j>:
//   mu_0 = t0 + t1 - t2 + t3,  mu_1 = t0 + t1 + t2 - t3,
//   mu_2 = t0 - t1 - t2 - t3,  mu_3 = t0 - t1 + t2 + t3.
std::array<double, 4> bell_phases(const PauliAngles& theta);

// U(theta) from its Bell eigendecomposition (exactly unitary).
Eigen::Matrix4cd pair_unitary(const PauliAngles& theta);

// The same unitary through a literal matrix exponential; cross-check path.
Eigen::Matrix4cd pair_unitary_expm(const PauliAngles& theta);

// Expansion coefficients of U(x) = G_0 1 - sum_{k>=1} G_k sigma_k (x) sigma_k:
//   G_k = (1/4) e^{-i(x0 - x1 - x2 - x3)}
//         [1 + sum_{{n,m} subset {1,2,3}} g_k(n,m) e^{-2i(x_n + x_m)}],
// with g_k(n,m) = +1 when k is outside {n,m} and -1 otherwise (g_0 = +1
// for all three pairs).
std::array<std::complex<double>, 4> gk_coefficients(const PauliAngles& x);

// Rebuilds the unitary from the expansion coefficients.
Eigen::Matrix4cd reconstruct_pair_unitary(const std::array<std::complex<double>, 4>& g);

// Full register unitary U_14(theta) U_23(phi) on |b1 b2 b3 b4>.
Eigen::MatrixXcd remote_unitary(const PauliAngles& theta, const PauliAngles& phi);

// |a> on qubits (1,2) times |b> on qubits (3,4).
Eigen::VectorXcd product_pair_state(const Eigen::Vector4cd& a, const Eigen::Vector4cd& b);

PauliAngles negated(const PauliAngles& theta);

// Both invariance metrics between an input and output register state:
// `exact` includes the global phase, `phase_min` removes the optimal
// global phase before taking the distance (computed as
// ||out - e^{i arg<in|out>} in||, which stays meaningful below 1e-10
// where the sqrt(2 - 2|<in|out>|) form loses precision).
struct ResidualPair {
  double exact = 0;
  double phase_min = 0;
};

ResidualPair invariance_residual(const Eigen::VectorXcd& input,
                                 const Eigen::VectorXcd& output);

// Residual of U_14(theta) U_23(phi) on the doubled Bell state
// |B_j>_12 |B_j>_34, exact metric.  phi = -theta gives zero for every
// theta and every j.
double bell_invariance_residual(const PauliAngles& theta, const PauliAngles& phi, int j);

// Both residual metrics for an arbitrary pair state |a> placed on both
// pairs, |a>_12 |a>_34.
ResidualPair pair_state_invariance(const Eigen::Vector4cd& a, const PauliAngles& theta,
                                   const PauliAngles& phi);

// Constraint on theta under which phi = -theta still inverts remotely
// when the pair state is not a Bell state.
enum class AngleConstraint {
  kFree,        // any theta (Bell states)
  kEqual12,     // theta1 = theta2
  kOpposite12,  // theta1 = -theta2
  kEqual23,     // theta2 = theta3
  kOpposite23,  // theta2 = -theta3
  kEqual13,     // theta1 = theta3
  kOpposite13,  // theta1 = -theta3
  kZero,        // theta1 = theta2 = theta3 = 0 (theta0 free)
};

struct ZoologyClass {
  std::string branch;
  AngleConstraint constraint = AngleConstraint::kZero;
};

// Classifies a normalised two-qubit pair state by the support of its
// components c_0 = a00 + a11, c_1 = a01 + a10, c_2 = a01 - a10,
// c_3 = a00 - a11:
//   one component        -> "bell", unconstrained;
//   support {0,3}        -> diagonal states, theta1 = theta2
//                           ("computational-diagonal" when a single
//                           amplitude entry, else "two-term-diagonal");
//   support {1,2}        -> antidiagonal states, theta1 = -theta2
//                           ("computational-antidiagonal" / "two-term-antidiagonal");
//   support {0,1}        -> "four-term-01", theta2 = theta3;
//   support {0,2}        -> "four-term-02", theta1 = -theta3;
//   support {1,3}        -> "four-term-13", theta1 = theta3;
//   support {2,3}        -> "four-term-23", theta2 = -theta3;
//   anything larger      -> "otherwise", theta1 = theta2 = theta3 = 0.
ZoologyClass zoology_constraints(const Eigen::Vector4cd& state, double tol = 1e-9);

// The ten branch names in validation order.
const std::vector<std::string>& zoology_branches();

// Random pair state belonging to the given branch (amplitude magnitudes
// bounded away from the classification thresholds).
Eigen::Vector4cd sample_branch_state(const std::string& branch, std::mt19937_64& rng);

// Random angles satisfying the constraint, each free angle uniform on [-1, 1].
PauliAngles sample_satisfying(AngleConstraint c, std::mt19937_64& rng);

// Angles violating the protocol by a margin: for constrained branches one
// relation is detuned by |delta| in [0.2, 1] (phi stays -theta); for the
// unconstrained Bell branch the inversion itself is detuned,
// phi = -theta + delta e_k, which shows up only in the exact metric.
struct AnglePair {
  PauliAngles theta{};
  PauliAngles phi{};
};
AnglePair sample_violating(AngleConstraint c, std::mt19937_64& rng);

struct BranchReport {
  std::string branch;
  int draws = 0;
  double max_exact_residual = 0;  // satisfying draws, global phase included
  double max_phase_residual = 0;  // satisfying draws, phase removed
  double min_violation = 0;       // violating draws (exact metric for the
                                  // Bell branch, phase-minimised otherwise)
  bool constraint_sufficient = false;  // every satisfying draw within tol
  bool violations_detected = false;    // every violating draw above floor
};

// Runs `draws` satisfying and `draws` violating samples per branch.
std::vector<BranchReport> zoology_validate(int draws, std::uint64_t seed,
                                           double tol = 1e-10, double floor = 1e-6);

// CSV: branch,draws,max_exact_residual,max_phase_residual
std::string zoology_csv(const std::vector<BranchReport>& reports);

}  // namespace entit
