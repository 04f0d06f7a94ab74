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

#include "entit/fock.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace entit {
namespace {

using std::complex;

double ipow(double base, int n) {
  double acc = 1.0;
  double b = base;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) acc *= b;
    b *= b;
  }
  return acc;
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double log_binomial(int n, int k) {
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

// Matrix element <p', q'| U |p, q> of the two-mode beam splitter with
// a_h -> a_h cos(alpha) - a_k sin(alpha) in the Heisenberg picture,
// restricted to one excitation sector p + q = p' + q':
//   sqrt(p'! q'! / (p! q!)) * sum_s (-1)^u C(p,s) C(q,u)
//       cos^{p+q-s-u} sin^{s+u},   u = p' - p + s.
double bs_matrix_element(int pp, int qp, int p, int q, double c, double s) {
  double acc = 0.0;
  for (int t = 0; t <= p; ++t) {
    const int u = pp - p + t;
    if (u < 0 || u > q) continue;
    const double mag = std::exp(0.5 * (log_factorial(pp) + log_factorial(qp) -
                                       log_factorial(p) - log_factorial(q)) +
                                log_binomial(p, t) + log_binomial(q, u));
    const double sign = (u % 2 == 0) ? 1.0 : -1.0;
    acc += sign * mag * ipow(c, p + q - t - u) * ipow(s, t + u);
  }
  return acc;
}

// Unitary of one excitation sector (total M, first-mode occupation j in
// [jmin, jmax]) of the pair beam splitter, columns indexed by the input j.
Eigen::MatrixXd sector_unitary(int M, int jmin, int jmax, double alpha, BsMethod method) {
  const int L = jmax - jmin + 1;
  if (method == BsMethod::kCoefficientFormula) {
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    Eigen::MatrixXd u(L, L);
    for (int j = jmin; j <= jmax; ++j)
      for (int jp = jmin; jp <= jmax; ++jp)
        u(jp - jmin, j - jmin) = bs_matrix_element(jp, M - jp, j, M - j, c, s);
    return u;
  }
  // Generator of the sector: K|j, M-j> = sqrt(j (M-j+1)) |j-1, M-j+1>
  //                                    - sqrt((j+1)(M-j)) |j+1, M-j-1>.
  // Antisymmetric, so the exponential is exactly orthogonal even when the
  // sector is truncated at the cutoff.
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(L, L);
  for (int j = jmin; j <= jmax; ++j) {
    if (j - 1 >= jmin) g(j - 1 - jmin, j - jmin) = std::sqrt(double(j) * double(M - j + 1));
    if (j + 1 <= jmax) g(j + 1 - jmin, j - jmin) = -std::sqrt(double(j + 1) * double(M - j));
  }
  return (alpha * g).exp();
}

// Applies the beam splitter with angle alpha to the tensor axes
// (axis_a, axis_b), axis_a playing the role of the first mode in the
// sign convention.  Works in place.
void apply_pair_axes(FockTensor4& state, int axis_a, int axis_b, double alpha,
                     BsMethod method) {
  const int d = state.dim();
  const int N = state.cutoff;
  std::size_t stride[4];
  stride[3] = 1;
  stride[2] = static_cast<std::size_t>(d);
  stride[1] = static_cast<std::size_t>(d) * d;
  stride[0] = static_cast<std::size_t>(d) * d * d;

  int spect[2];
  int w = 0;
  for (int ax = 0; ax < 4; ++ax)
    if (ax != axis_a && ax != axis_b) spect[w++] = ax;

  Eigen::VectorXcd in_vec, out_vec;
  for (int M = 0; M <= 2 * N; ++M) {
    const int jmin = std::max(0, M - N);
    const int jmax = std::min(N, M);
    const int L = jmax - jmin + 1;
    if (L <= 1 && M == 0) {
      continue;  // vacuum sector is invariant
    }
    const Eigen::MatrixXd u = sector_unitary(M, jmin, jmax, alpha, method);
    in_vec.resize(L);
    out_vec.resize(L);
    for (int s1 = 0; s1 <= N; ++s1) {
      for (int s2 = 0; s2 <= N; ++s2) {
        const std::size_t base = static_cast<std::size_t>(s1) * stride[spect[0]] +
                                 static_cast<std::size_t>(s2) * stride[spect[1]];
        for (int j = jmin; j <= jmax; ++j)
          in_vec[j - jmin] = state.amps[base + static_cast<std::size_t>(j) * stride[axis_a] +
                                        static_cast<std::size_t>(M - j) * stride[axis_b]];
        out_vec.noalias() = u * in_vec;
        for (int j = jmin; j <= jmax; ++j)
          state.amps[base + static_cast<std::size_t>(j) * stride[axis_a] +
                     static_cast<std::size_t>(M - j) * stride[axis_b]] = out_vec[j - jmin];
      }
    }
  }
}

double squared_norm_two_mode(const TwoModeAmplitudes& t) {
  return t.amps.squaredNorm();
}

void require_same_cutoff(int a, int b) {
  if (a != b) throw std::invalid_argument("cutoff mismatch between amplitude tables");
}

}  // namespace

double TwoModeAmplitudes::norm() const { return std::sqrt(squared_norm_two_mode(*this)); }

TwoModeAmplitudes TwoModeAmplitudes::normalized() const {
  TwoModeAmplitudes out = *this;
  const double n = norm();
  if (n <= 0) throw std::runtime_error("cannot normalise a zero amplitude table");
  out.amps /= n;
  return out;
}

bool TwoModeAmplitudes::is_photon_number_entangled(double tol) const {
  for (int n = 0; n <= cutoff; ++n)
    for (int m = 0; m <= cutoff; ++m)
      if (n != m && std::abs(amps(n, m)) > tol) return false;
  return true;
}

TwoModeAmplitudes twb_fock(double r, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  const double lambda = std::tanh(r);
  TwoModeAmplitudes out;
  out.cutoff = cutoff;
  out.amps = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
  const double head = std::sqrt(1.0 - lambda * lambda);
  for (int n = 0; n <= cutoff; ++n) out.amps(n, n) = head * ipow(lambda, n);
  out.truncation_tail = ipow(lambda, 2 * (cutoff + 1));
  return out;
}

TwoModeAmplitudes vacuum_two_mode(int cutoff) { return twb_fock(0.0, cutoff); }

std::complex<double> overlap_two_mode(const TwoModeAmplitudes& a,
                                      const TwoModeAmplitudes& b) {
  require_same_cutoff(a.cutoff, b.cutoff);
  complex<double> acc = 0;
  for (int n = 0; n <= a.cutoff; ++n)
    for (int m = 0; m <= a.cutoff; ++m) acc += std::conj(a.amps(n, m)) * b.amps(n, m);
  return acc;
}

double FockTensor4::norm() const {
  double acc = 0;
  for (const auto& a : amps) acc += std::norm(a);
  return std::sqrt(acc);
}

FockTensor4& FockTensor4::normalize() {
  const double n = norm();
  if (n <= 0) throw std::runtime_error("cannot normalise a zero amplitude tensor");
  for (auto& a : amps) a /= n;
  return *this;
}

FockTensor4 product_state(const TwoModeAmplitudes& a, const TwoModeAmplitudes& b) {
  require_same_cutoff(a.cutoff, b.cutoff);
  FockTensor4 out;
  out.cutoff = a.cutoff;
  const int d = out.dim();
  out.amps.assign(static_cast<std::size_t>(d) * d * d * d, complex<double>(0));
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m)
      for (int h = 0; h < d; ++h)
        for (int k = 0; k < d; ++k) out.at(n, m, h, k) = a.amps(n, m) * b.amps(h, k);
  return out;
}

FockTensor4 product_state_13_24(const TwoModeAmplitudes& a, const TwoModeAmplitudes& b) {
  require_same_cutoff(a.cutoff, b.cutoff);
  FockTensor4 out;
  out.cutoff = a.cutoff;
  const int d = out.dim();
  out.amps.assign(static_cast<std::size_t>(d) * d * d * d, complex<double>(0));
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m)
      for (int h = 0; h < d; ++h)
        for (int k = 0; k < d; ++k) out.at(n, m, h, k) = a.amps(n, h) * b.amps(m, k);
  return out;
}

double incomplete_pair_sector_weight(const FockTensor4& state) {
  const int d = state.dim();
  const int N = state.cutoff;
  double acc = 0;
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m)
      for (int h = 0; h < d; ++h)
        for (int k = 0; k < d; ++k)
          if (n + k > N || m + h > N) acc += std::norm(state.at(n, m, h, k));
  return acc;
}

FockTensor4 restrict_pair_excitation(const FockTensor4& state, double* dropped) {
  FockTensor4 out = state;
  const int d = out.dim();
  const int N = out.cutoff;
  double lost = 0;
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m)
      for (int h = 0; h < d; ++h)
        for (int k = 0; k < d; ++k)
          if (n + k > N || m + h > N) {
            lost += std::norm(out.at(n, m, h, k));
            out.at(n, m, h, k) = 0;
          }
  out.truncation_loss += lost;
  if (dropped != nullptr) *dropped = lost;
  out.normalize();
  return out;
}

FockTensor4 apply_bs_pair_fock(const FockTensor4& state, double phi, double psi,
                               BsMethod method, double overflow_tol) {
  const double leak = incomplete_pair_sector_weight(state);
  if (leak > overflow_tol) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "cutoff overflow: weight %.3e in truncated pair-excitation sectors "
                  "exceeds tolerance %.3e; raise the cutoff or restrict the input",
                  leak, overflow_tol);
    throw std::runtime_error(buf);
  }
  FockTensor4 out = state;
  apply_pair_axes(out, 0, 3, phi, method);   // modes (1, 4)
  apply_pair_axes(out, 1, 2, psi, method);   // modes (2, 3)
  return out;
}

std::complex<double> overlap(const FockTensor4& a, const FockTensor4& b) {
  require_same_cutoff(a.cutoff, b.cutoff);
  complex<double> acc = 0;
  for (std::size_t i = 0; i < a.amps.size(); ++i) acc += std::conj(a.amps[i]) * b.amps[i];
  return acc;
}

ReducedPair reduced_moments(const FockTensor4& state, std::pair<int, int> kept) {
  const int a = kept.first - 1;
  const int b = kept.second - 1;
  if (a < 0 || a > 3 || b < 0 || b > 3 || a == b)
    throw std::invalid_argument("kept modes must be two distinct indices in 1..4");
  const int d = state.dim();
  const int N = state.cutoff;

  std::size_t stride[4];
  stride[3] = 1;
  stride[2] = static_cast<std::size_t>(d);
  stride[1] = static_cast<std::size_t>(d) * d;
  stride[0] = static_cast<std::size_t>(d) * d * d;
  int spect[2];
  int w = 0;
  for (int ax = 0; ax < 4; ++ax)
    if (ax != a && ax != b) spect[w++] = ax;

  // Reshape |state> into a (kept) x (traced) matrix; the reduced density
  // matrix is then psi psi^dagger.
  const int D = d * d;
  Eigen::MatrixXcd psi(D, D);
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q)
      for (int s1 = 0; s1 < d; ++s1)
        for (int s2 = 0; s2 < d; ++s2)
          psi(p * d + q, s1 * d + s2) =
              state.amps[static_cast<std::size_t>(p) * stride[a] +
                         static_cast<std::size_t>(q) * stride[b] +
                         static_cast<std::size_t>(s1) * stride[spect[0]] +
                         static_cast<std::size_t>(s2) * stride[spect[1]]];

  ReducedPair out;
  out.kept = kept;
  out.cutoff = N;
  out.rho = psi * psi.adjoint();
  const double tr = out.rho.trace().real();
  if (tr <= 0) throw std::runtime_error("reduced density matrix has non-positive trace");
  out.rho /= tr;

  // Ladder-operator moments of the trace-normalised reduced state.
  auto rho_el = [&](int p, int q, int pp, int qq) -> complex<double> {
    return out.rho(p * d + q, pp * d + qq);
  };
  complex<double> a1 = 0, a2 = 0, a11 = 0, a22 = 0, e12 = 0, f12 = 0;
  double n1 = 0, n2 = 0;
  for (int p = 0; p < d; ++p) {
    for (int q = 0; q < d; ++q) {
      n1 += static_cast<double>(p) * rho_el(p, q, p, q).real();
      n2 += static_cast<double>(q) * rho_el(p, q, p, q).real();
      if (p >= 1) a1 += std::sqrt(double(p)) * rho_el(p, q, p - 1, q);
      if (q >= 1) a2 += std::sqrt(double(q)) * rho_el(p, q, p, q - 1);
      if (p >= 2) a11 += std::sqrt(double(p) * (p - 1)) * rho_el(p, q, p - 2, q);
      if (q >= 2) a22 += std::sqrt(double(q) * (q - 1)) * rho_el(p, q, p, q - 2);
      if (p >= 1 && q >= 1) e12 += std::sqrt(double(p) * q) * rho_el(p, q, p - 1, q - 1);
      if (p >= 1 && q + 1 < d) f12 += std::sqrt(double(p) * (q + 1)) * rho_el(p, q, p - 1, q + 1);
    }
  }

  const double mx1 = std::sqrt(2.0) * a1.real();
  const double mp1 = std::sqrt(2.0) * a1.imag();
  const double mx2 = std::sqrt(2.0) * a2.real();
  const double mp2 = std::sqrt(2.0) * a2.imag();
  out.mean << mx1, mp1, mx2, mp2;

  Eigen::Matrix4d cov;
  cov(0, 0) = a11.real() + n1 + 0.5 - mx1 * mx1;
  cov(1, 1) = -a11.real() + n1 + 0.5 - mp1 * mp1;
  cov(0, 1) = a11.imag() - mx1 * mp1;
  cov(2, 2) = a22.real() + n2 + 0.5 - mx2 * mx2;
  cov(3, 3) = -a22.real() + n2 + 0.5 - mp2 * mp2;
  cov(2, 3) = a22.imag() - mx2 * mp2;
  cov(0, 2) = e12.real() + f12.real() - mx1 * mx2;
  cov(1, 3) = -e12.real() + f12.real() - mp1 * mp2;
  cov(0, 3) = e12.imag() - f12.imag() - mx1 * mp2;
  cov(1, 2) = e12.imag() + f12.imag() - mp1 * mx2;
  cov(1, 0) = cov(0, 1);
  cov(3, 2) = cov(2, 3);
  cov(2, 0) = cov(0, 2);
  cov(3, 1) = cov(1, 3);
  cov(3, 0) = cov(0, 3);
  cov(2, 1) = cov(1, 2);
  out.cov = cov;
  return out;
}

double ReducedPair::pure_overlap(const TwoModeAmplitudes& psi) const {
  require_same_cutoff(cutoff, psi.cutoff);
  const int d = cutoff + 1;
  Eigen::VectorXcd v(d * d);
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) v(p * d + q) = psi.amps(p, q);
  const complex<double> val = v.adjoint() * (rho * v);
  return val.real();
}

double transparency_residual_1111(const TwoModeAmplitudes& a,
                                  const TwoModeAmplitudes& b,
                                  double phi, double psi) {
  if (a.cutoff < 2 || b.cutoff < 2)
    throw std::invalid_argument("transparency residual needs amplitudes up to index 2");
  require_same_cutoff(a.cutoff, b.cutoff);
  const auto& ps = a.amps;
  const auto& om = b.amps;
  const double c2f = std::cos(2 * phi), s2f = std::sin(2 * phi);
  const double c2s = std::cos(2 * psi), s2s = std::sin(2 * psi);
  const complex<double> lhs = ps(1, 1) * om(1, 1);
  const complex<double> rhs =
      c2f * c2s * ps(1, 1) * om(1, 1) +
      c2f * s2s / std::sqrt(2.0) * (ps(1, 0) * om(2, 1) - ps(1, 2) * om(0, 1)) +
      s2f * c2s / std::sqrt(2.0) * (ps(0, 1) * om(1, 2) - ps(2, 1) * om(1, 0)) +
      s2f * s2s / 2.0 * (ps(2, 2) * om(0, 0) - ps(0, 2) * om(0, 2) -
                         ps(2, 0) * om(2, 0) + ps(0, 0) * om(2, 2));
  return std::abs(lhs - rhs);
}

double pnes_residual(const Eigen::VectorXcd& psi_diag,
                     const Eigen::VectorXcd& omega_diag,
                     double phi, double psi) {
  if (psi_diag.size() < 3 || omega_diag.size() < 3)
    throw std::invalid_argument("photon-number-entangled residual needs entries 0..2");
  const complex<double> lhs = psi_diag(1) * omega_diag(1);
  const complex<double> rhs =
      std::cos(2 * phi) * std::cos(2 * psi) * psi_diag(1) * omega_diag(1) +
      std::sin(2 * phi) * std::sin(2 * psi) / 2.0 *
          (psi_diag(2) * omega_diag(0) + psi_diag(0) * omega_diag(2));
  return std::abs(lhs - rhs);
}

std::string dump_amplitudes_csv(const FockTensor4& state) {
  std::string out = "n,m,h,k,re,im\n";
  char buf[128];
  const int d = state.dim();
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m)
      for (int h = 0; h < d; ++h)
        for (int k = 0; k < d; ++k) {
          const auto& a = state.at(n, m, h, k);
          std::snprintf(buf, sizeof(buf), "%d,%d,%d,%d,%.12g,%.12g\n", n, m, h, k,
                        a.real(), a.imag());
          out += buf;
        }
  return out;
}

}  // namespace entit
