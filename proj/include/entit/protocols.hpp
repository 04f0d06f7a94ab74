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

#include <string>

#include "entit/emit.hpp"
#include "entit/fock.hpp"
#include "entit/gaussian.hpp"

// Continuous-variable protocols built on the Gaussian engine and
// cross-checked against the Fock-space oracle: entanglement-induced
// transparency, entanglement swapping, separability scans, loss channels
// with entangled baths, and the perturbative fidelity expansions.
namespace entit {

// Effective two-mode-squeezing parameters of the four output pairings
// when TWB(r) enters on modes (1,2) and TWB(s) on modes (3,4):
//   c12 = r cos(phi) cos(psi) + s sin(phi) sin(psi)   direct pair (1,2)
//   c34 = r sin(phi) sin(psi) + s cos(phi) cos(psi)   direct pair (3,4)
//   c13 = r cos(phi) sin(psi) - s sin(phi) cos(psi)   crossed pair (1,3)
//   c24 = r sin(phi) cos(psi) - s cos(phi) sin(psi)   crossed pair (2,4)
struct OutputTwbCoefficients {
  double c12 = 0;
  double c34 = 0;
  double c13 = 0;
  double c24 = 0;
};

OutputTwbCoefficients output_twb_coefficients(double r, double s, double phi, double psi);

enum class OutputClass {
  kTransparent,  // crossed couplings vanish: state stays on pairs (1,2),(3,4)
  kSwapped,      // direct couplings vanish: entanglement moved to (1,3),(2,4)
  kGeneric,      // both kinds of coupling present
};

OutputClass classify_output(const OutputTwbCoefficients& c, double tol = 1e-9);
const char* to_string(OutputClass c);

// Pure-loss channel of transmissivity 1 - gamma, realised as a beam
// splitter of angle arccos(sqrt(1 - gamma)) against a bath mode.
// Throws std::invalid_argument unless 0 <= gamma <= 1.
struct LossChannel {
  double gamma = 0;
  explicit LossChannel(double g);
  double angle() const;
};

// Sweeps the bath squeezing s = x r over an 81-point (by default) x-grid
// on [-1, 1] at equal beam-splitter angles (phi, phi) and records the
// minimum partially-transposed symplectic eigenvalue of the reduced
// pairs (1,2) and (1,3).  Columns: x, kappa12, kappa13.  Entanglement of
// the pair <=> kappa < 1/2.
Table separability_scan(double r, int grid = 81, double phi = 0.78539816339744831);

// Exact fidelity between the reduced output pair (1,2) and the input
// reference TWB(r), from the Gaussian engine.
double reduced_pair_fidelity(double r, double s, double phi, double psi);

// Second-order small-detuning approximation of that fidelity in
// epsilon = s - r at equal angles psi = phi:
//   F ~ 1 - (1/2) [3 + sin^2(phi) cos(2 phi)] (s - r)^2.
double fidelity_expansion_sq(double r, double s, double phi);

// First-order approximation in the angle mismatch delta = phi - psi
// around the equal-angle point:
//   F ~ f + f^2 sin(2 phi) cos^2(phi) sinh^2(r - s) (phi - psi),
//   f = 1 / (1 + [1 + cos^2(phi)] sin^2(phi) sinh^2(r - s)).
double fidelity_expansion_bs(double r, double s, double phi, double psi);

// Loss channels of strength gamma on both modes of a signal TWB(r), with
// the two bath modes prepared in a TWB(s).  Sweeps s over a 51-point (by
// default) grid on [0, 1.5 r] and records entanglement of formation and
// purity of the surviving pair (1,2).  Columns: s, Ef, purity.
Table bath_recovery_curve(double r, double gamma, int s_grid = 51);

// Cross-validation report for one parameter point: the Gaussian engine
// and the Fock oracle run the same network and every redundant quantity
// is compared.  Reference states follow the coefficient classification
// (transparent -> product TWB(c12) x TWB(c34) on the direct pairs,
// swapped -> product on the crossed pairs); for the generic class no
// closed-form state reference exists and the state-level residuals are
// NaN.
struct EntitReport {
  double r = 0, s = 0, phi = 0, psi = 0;
  int cutoff = 0;
  OutputTwbCoefficients coeffs;
  OutputClass classification = OutputClass::kGeneric;

  double transparency_residual = 0;  // (1,1,1,1)-amplitude condition residual
  double cm_roundtrip_error = 0;     // max |Sigma_out - Sigma_ref| (NaN when generic)
  double fock_residual = 0;          // phase-aligned ||out - ref|| (NaN when generic)
  double state_overlap = 0;          // |<ref|out>| (NaN when generic)
  double fidelity_gauss = 0;         // reduced primary-pair fidelity, Gaussian engine
  double fidelity_fock = 0;          // same quantity from the Fock oracle
  double fidelity_gap = 0;           // |fidelity_gauss - fidelity_fock|
  double dropped_weight = 0;         // weight removed by cutoff preparation

  bool within_tolerance = false;
  std::string first_failure;  // empty when within_tolerance
};

EntitReport entit_report(double r, double s, double phi, double psi, int cutoff,
                         double cm_tol = 1e-10, double state_tol = 1e-9,
                         double fidelity_tol = 1e-6);

std::string format_report(const EntitReport& rep);

}  // namespace entit
