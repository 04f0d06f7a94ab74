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

#include "entit/protocols.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "entit/parallel.hpp"

namespace entit {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

std::string fmt_or_na(double v) { return std::isnan(v) ? "n/a" : fmt("%.6e", v); }

// 8x8 covariance of TWB(ra) on modes (a1, a2) times TWB(rb) on the two
// remaining modes (b1, b2); all indices 1-based.
Eigen::MatrixXd paired_twb_covariance(double ra, int a1, int a2, double rb, int b1, int b2) {
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(8, 8);
  const auto embed = [&sigma](const Eigen::Matrix4d& cm, int m1, int m2) {
    const int q[2] = {2 * (m1 - 1), 2 * (m2 - 1)};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        sigma.block<2, 2>(q[i], q[j]) = cm.block<2, 2>(2 * i, 2 * j);
  };
  embed(twb_covariance(ra), a1, a2);
  embed(twb_covariance(rb), b1, b2);
  return sigma;
}

}  // namespace

OutputTwbCoefficients output_twb_coefficients(double r, double s, double phi, double psi) {
  const double cf = std::cos(phi), sf = std::sin(phi);
  const double cp = std::cos(psi), sp = std::sin(psi);
  OutputTwbCoefficients c;
  c.c12 = r * cf * cp + s * sf * sp;
  c.c34 = r * sf * sp + s * cf * cp;
  c.c13 = r * cf * sp - s * sf * cp;
  c.c24 = r * sf * cp - s * cf * sp;
  return c;
}

OutputClass classify_output(const OutputTwbCoefficients& c, double tol) {
  if (std::abs(c.c13) + std::abs(c.c24) <= tol) return OutputClass::kTransparent;
  if (std::abs(c.c12) + std::abs(c.c34) <= tol) return OutputClass::kSwapped;
  return OutputClass::kGeneric;
}

const char* to_string(OutputClass c) {
  switch (c) {
    case OutputClass::kTransparent: return "transparent";
    case OutputClass::kSwapped: return "swapped";
    default: return "generic";
  }
}

LossChannel::LossChannel(double g) : gamma(g) {
  if (!(g >= 0.0 && g <= 1.0))
    throw std::invalid_argument("loss strength gamma must lie in [0, 1]");
}

double LossChannel::angle() const { return std::acos(std::sqrt(1.0 - gamma)); }

Table separability_scan(double r, int grid, double phi) {
  if (grid < 2) throw std::invalid_argument("scan grid needs at least two points");
  Table t;
  t.columns = {"x", "kappa12", "kappa13"};
  t.rows.assign(grid, std::vector<double>(3, 0.0));
  const Eigen::MatrixXd bs = bs_pair_symplectic(phi, phi);
  parallel_for(grid, [&](int i) {
    const double x = -1.0 + 2.0 * i / (grid - 1);
    const Eigen::MatrixXd sigma =
        evolve_covariance(four_mode_input_covariance(r, x * r), bs);
    t.rows[i][0] = x;
    t.rows[i][1] = min_ppt_symplectic_eigenvalue(reduce(sigma, {1, 2}));
    t.rows[i][2] = min_ppt_symplectic_eigenvalue(reduce(sigma, {1, 3}));
  });
  return t;
}

double reduced_pair_fidelity(double r, double s, double phi, double psi) {
  const Eigen::MatrixXd sigma =
      evolve_covariance(four_mode_input_covariance(r, s), bs_pair_symplectic(phi, psi));
  return gaussian_fidelity(reduce(sigma, {1, 2}), twb_covariance(r));
}

double fidelity_expansion_sq(double r, double s, double phi) {
  const double sf = std::sin(phi);
  const double eps = s - r;
  return 1.0 - 0.5 * (3.0 + sf * sf * std::cos(2.0 * phi)) * eps * eps;
}

double fidelity_expansion_bs(double r, double s, double phi, double psi) {
  const double sf = std::sin(phi), cf = std::cos(phi);
  const double sh2 = std::sinh(r - s) * std::sinh(r - s);
  const double f = 1.0 / (1.0 + (1.0 + cf * cf) * sf * sf * sh2);
  return f + f * f * std::sin(2.0 * phi) * cf * cf * sh2 * (phi - psi);
}

Table bath_recovery_curve(double r, double gamma, int s_grid) {
  if (s_grid < 2) throw std::invalid_argument("recovery grid needs at least two points");
  const double alpha = LossChannel(gamma).angle();
  Table t;
  t.columns = {"s", "Ef", "purity"};
  t.rows.assign(s_grid, std::vector<double>(3, 0.0));
  const Eigen::MatrixXd bs = bs_pair_symplectic(alpha, alpha);
  parallel_for(s_grid, [&](int i) {
    const double s = 1.5 * r * i / (s_grid - 1);
    const Eigen::Matrix4d red =
        reduce(evolve_covariance(four_mode_input_covariance(r, s), bs), {1, 2});
    t.rows[i][0] = s;
    t.rows[i][1] = entanglement_of_formation(min_ppt_symplectic_eigenvalue(red));
    t.rows[i][2] = purity(red);
  });
  return t;
}

EntitReport entit_report(double r, double s, double phi, double psi, int cutoff,
                         double cm_tol, double state_tol, double fidelity_tol) {
  EntitReport rep;
  rep.r = r;
  rep.s = s;
  rep.phi = phi;
  rep.psi = psi;
  rep.cutoff = cutoff;
  rep.coeffs = output_twb_coefficients(r, s, phi, psi);
  rep.classification = classify_output(rep.coeffs);

  // Gaussian engine.
  const Eigen::MatrixXd sigma_out =
      evolve_covariance(four_mode_input_covariance(r, s), bs_pair_symplectic(phi, psi));

  // Fock oracle, on the cutoff-complete excitation sectors.
  const TwoModeAmplitudes ta = twb_fock(r, cutoff);
  const TwoModeAmplitudes tb = twb_fock(s, cutoff);
  const FockTensor4 input =
      restrict_pair_excitation(product_state(ta, tb), &rep.dropped_weight);
  const FockTensor4 output = apply_bs_pair_fock(input, phi, psi, BsMethod::kExponential);

  rep.transparency_residual =
      transparency_residual_1111(ta.normalized(), tb.normalized(), phi, psi);

  // State-level comparison against the classification reference.
  rep.cm_roundtrip_error = kNan;
  rep.fock_residual = kNan;
  rep.state_overlap = kNan;
  if (rep.classification != OutputClass::kGeneric) {
    Eigen::MatrixXd sigma_ref;
    FockTensor4 fock_ref;
    if (rep.classification == OutputClass::kTransparent) {
      sigma_ref = four_mode_input_covariance(rep.coeffs.c12, rep.coeffs.c34);
      fock_ref = restrict_pair_excitation(
          product_state(twb_fock(rep.coeffs.c12, cutoff), twb_fock(rep.coeffs.c34, cutoff)));
    } else {
      sigma_ref = paired_twb_covariance(rep.coeffs.c13, 1, 3, rep.coeffs.c24, 2, 4);
      fock_ref = restrict_pair_excitation(product_state_13_24(
          twb_fock(rep.coeffs.c13, cutoff), twb_fock(rep.coeffs.c24, cutoff)));
    }
    rep.cm_roundtrip_error = (sigma_out - sigma_ref).cwiseAbs().maxCoeff();
    const std::complex<double> ov = overlap(fock_ref, output);
    rep.state_overlap = std::abs(ov);
    // Phase-aligned distance: ||out - e^{i arg(ov)} ref||.
    const std::complex<double> phase =
        (rep.state_overlap > 0) ? ov / rep.state_overlap : std::complex<double>(1, 0);
    double acc = 0;
    for (std::size_t i = 0; i < output.amps.size(); ++i)
      acc += std::norm(output.amps[i] - phase * fock_ref.amps[i]);
    rep.fock_residual = std::sqrt(acc);
  }

  // Double-entry fidelity of the primary surviving pair.
  const bool swapped = rep.classification == OutputClass::kSwapped;
  const std::pair<int, int> pair = swapped ? std::make_pair(1, 3) : std::make_pair(1, 2);
  double ref_r = r;
  if (rep.classification == OutputClass::kTransparent) ref_r = rep.coeffs.c12;
  if (swapped) ref_r = rep.coeffs.c13;
  rep.fidelity_gauss = gaussian_fidelity(reduce(sigma_out, pair), twb_covariance(ref_r));
  rep.fidelity_fock =
      reduced_moments(output, pair).pure_overlap(twb_fock(ref_r, cutoff).normalized());
  rep.fidelity_gap = std::abs(rep.fidelity_gauss - rep.fidelity_fock);

  rep.within_tolerance = true;
  const auto check = [&rep](const char* name, bool ok) {
    if (!ok && rep.within_tolerance) {
      rep.within_tolerance = false;
      rep.first_failure = name;
    }
  };
  if (rep.classification != OutputClass::kGeneric) {
    check("covariance-roundtrip", rep.cm_roundtrip_error <= cm_tol);
    check("state-residual", rep.fock_residual <= state_tol);
  }
  if (rep.classification == OutputClass::kTransparent)
    check("transparency-residual", rep.transparency_residual <= state_tol);
  check("fidelity-gap", rep.fidelity_gap <= fidelity_tol);
  return rep;
}

std::string format_report(const EntitReport& rep) {
  std::string out;
  out += "parameters: r=" + fmt("%g", rep.r) + " s=" + fmt("%g", rep.s) +
         " phi=" + fmt("%g", rep.phi) + " psi=" + fmt("%g", rep.psi) +
         " cutoff=" + fmt("%g", rep.cutoff) + "\n";
  out += "output coefficients: c12=" + fmt("%.6g", rep.coeffs.c12) +
         " c34=" + fmt("%.6g", rep.coeffs.c34) + " c13=" + fmt("%.6g", rep.coeffs.c13) +
         " c24=" + fmt("%.6g", rep.coeffs.c24) + "\n";
  out += std::string("classification: ") + to_string(rep.classification) + "\n";
  out += "transparency residual (1,1,1,1): " + fmt("%.6e", rep.transparency_residual) + "\n";
  out += "covariance roundtrip error: " + fmt_or_na(rep.cm_roundtrip_error) + "\n";
  out += "state residual: " + fmt_or_na(rep.fock_residual) +
         " (overlap " + fmt_or_na(rep.state_overlap) + ")\n";
  out += "fidelity, Gaussian engine: " + fmt("%.12g", rep.fidelity_gauss) + "\n";
  out += "fidelity, Fock oracle:     " + fmt("%.12g", rep.fidelity_fock) + "\n";
  out += "fidelity gap: " + fmt("%.6e", rep.fidelity_gap) + "\n";
  out += "weight dropped at cutoff: " + fmt("%.6e", rep.dropped_weight) + "\n";
  out += rep.within_tolerance
             ? "verdict: all cross-checks within tolerance\n"
             : "verdict: FAILED check '" + rep.first_failure + "'\n";
  return out;
}

}  // namespace entit
