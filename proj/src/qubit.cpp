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

#include "entit/qubit.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace entit {
namespace {

using std::complex;
constexpr complex<double> kI(0.0, 1.0);

Eigen::Matrix4cd kron22(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

complex<double> random_coeff(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> mag(lo, hi);
  std::uniform_real_distribution<double> arg(0.0, 2.0 * M_PI);
  const double m = mag(rng);
  const double a = arg(rng);
  return {m * std::cos(a), m * std::sin(a)};
}

// Pair state from components (c0, c1, c2, c3):
// a00 = (c0+c3)/2, a11 = (c0-c3)/2, a01 = (c1+c2)/2, a10 = (c1-c2)/2.
Eigen::Vector4cd state_from_components(const std::array<complex<double>, 4>& c) {
  Eigen::Vector4cd v;
  v(0) = 0.5 * (c[0] + c[3]);
  v(3) = 0.5 * (c[0] - c[3]);
  v(1) = 0.5 * (c[1] + c[2]);
  v(2) = 0.5 * (c[1] - c[2]);
  return v.normalized();
}

int pick(std::mt19937_64& rng, int n) {
  return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng));
}

}  // namespace

Eigen::Matrix2cd pauli(int k) {
  Eigen::Matrix2cd m;
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli index must be 0..3");
  }
  return m;
}

Eigen::Vector4cd bell_state(int j) {
  const double q = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  switch (j) {
    case 0: v(0) = q; v(3) = q; break;   // Phi+
    case 1: v(1) = q; v(2) = q; break;   // Psi+
    case 2: v(1) = q; v(2) = -q; break;  // Psi-
    case 3: v(0) = q; v(3) = -q; break;  // Phi-
    default: throw std::invalid_argument("Bell index must be 0..3");
  }
  return v;
}

std::array<double, 4> bell_phases(const PauliAngles& t) {
  return {t[0] + t[1] - t[2] + t[3], t[0] + t[1] + t[2] - t[3],
          t[0] - t[1] - t[2] - t[3], t[0] - t[1] + t[2] + t[3]};
}

Eigen::Matrix4cd pair_unitary(const PauliAngles& theta) {
  const auto mu = bell_phases(theta);
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  for (int j = 0; j < 4; ++j) {
    const Eigen::Vector4cd b = bell_state(j);
    u += std::exp(-kI * mu[j]) * (b * b.adjoint());
  }
  return u;
}

Eigen::Matrix4cd pair_unitary_expm(const PauliAngles& theta) {
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  for (int k = 0; k < 4; ++k) h += theta[k] * kron22(pauli(k), pauli(k));
  return (-kI * h).exp();
}

std::array<complex<double>, 4> gk_coefficients(const PauliAngles& x) {
  const complex<double> head = 0.25 * std::exp(-kI * (x[0] - x[1] - x[2] - x[3]));
  const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  std::array<complex<double>, 4> g;
  for (int k = 0; k < 4; ++k) {
    complex<double> acc = 1.0;
    for (const auto& nm : pairs) {
      const double sign = (k == nm[0] || k == nm[1]) ? -1.0 : 1.0;
      acc += sign * std::exp(-2.0 * kI * (x[nm[0]] + x[nm[1]]));
    }
    g[k] = head * acc;
  }
  return g;
}

Eigen::Matrix4cd reconstruct_pair_unitary(const std::array<complex<double>, 4>& g) {
  Eigen::Matrix4cd u = g[0] * Eigen::Matrix4cd::Identity();
  for (int k = 1; k < 4; ++k) u -= g[k] * kron22(pauli(k), pauli(k));
  return u;
}

Eigen::MatrixXcd remote_unitary(const PauliAngles& theta, const PauliAngles& phi) {
  const Eigen::Matrix4cd u14 = pair_unitary(theta);
  const Eigen::Matrix4cd u23 = pair_unitary(phi);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(16, 16);
  for (int out = 0; out < 16; ++out) {
    const int o1 = (out >> 3) & 1, o2 = (out >> 2) & 1, o3 = (out >> 1) & 1, o4 = out & 1;
    for (int in = 0; in < 16; ++in) {
      const int i1 = (in >> 3) & 1, i2 = (in >> 2) & 1, i3 = (in >> 1) & 1, i4 = in & 1;
      u(out, in) = u14(o1 * 2 + o4, i1 * 2 + i4) * u23(o2 * 2 + o3, i2 * 2 + i3);
    }
  }
  return u;
}

Eigen::VectorXcd product_pair_state(const Eigen::Vector4cd& a, const Eigen::Vector4cd& b) {
  Eigen::VectorXcd v(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v(i * 4 + j) = a(i) * b(j);
  return v;
}

PauliAngles negated(const PauliAngles& t) { return {-t[0], -t[1], -t[2], -t[3]}; }

ResidualPair invariance_residual(const Eigen::VectorXcd& input,
                                 const Eigen::VectorXcd& output) {
  if (input.size() != output.size())
    throw std::invalid_argument("residual needs equal-length states");
  ResidualPair r;
  r.exact = (output - input).norm();
  const complex<double> ov = input.dot(output);  // <in|out>
  const complex<double> phase =
      (std::abs(ov) > 0) ? ov / std::abs(ov) : complex<double>(1, 0);
  r.phase_min = (output - phase * input).norm();
  return r;
}

double bell_invariance_residual(const PauliAngles& theta, const PauliAngles& phi, int j) {
  const Eigen::VectorXcd in = product_pair_state(bell_state(j), bell_state(j));
  return invariance_residual(in, remote_unitary(theta, phi) * in).exact;
}

ResidualPair pair_state_invariance(const Eigen::Vector4cd& a, const PauliAngles& theta,
                                   const PauliAngles& phi) {
  const Eigen::VectorXcd in = product_pair_state(a, a);
  return invariance_residual(in, remote_unitary(theta, phi) * in);
}

ZoologyClass zoology_constraints(const Eigen::Vector4cd& state, double tol) {
  const complex<double> c0 = state(0) + state(3);
  const complex<double> c1 = state(1) + state(2);
  const complex<double> c2 = state(1) - state(2);
  const complex<double> c3 = state(0) - state(3);
  const bool s0 = std::abs(c0) > tol, s1 = std::abs(c1) > tol;
  const bool s2 = std::abs(c2) > tol, s3 = std::abs(c3) > tol;
  const int count = int(s0) + int(s1) + int(s2) + int(s3);
  int entries = 0;
  for (int i = 0; i < 4; ++i)
    if (std::abs(state(i)) > tol) ++entries;

  if (count <= 1) return {"bell", AngleConstraint::kFree};
  if (s0 && s3 && !s1 && !s2)
    return {entries == 1 ? "computational-diagonal" : "two-term-diagonal",
            AngleConstraint::kEqual12};
  if (s1 && s2 && !s0 && !s3)
    return {entries == 1 ? "computational-antidiagonal" : "two-term-antidiagonal",
            AngleConstraint::kOpposite12};
  if (s0 && s1 && !s2 && !s3) return {"four-term-01", AngleConstraint::kEqual23};
  if (s0 && s2 && !s1 && !s3) return {"four-term-02", AngleConstraint::kOpposite13};
  if (s1 && s3 && !s0 && !s2) return {"four-term-13", AngleConstraint::kEqual13};
  if (s2 && s3 && !s0 && !s1) return {"four-term-23", AngleConstraint::kOpposite23};
  return {"otherwise", AngleConstraint::kZero};
}

const std::vector<std::string>& zoology_branches() {
  static const std::vector<std::string> kBranches = {
      "bell",
      "computational-diagonal",
      "two-term-diagonal",
      "computational-antidiagonal",
      "two-term-antidiagonal",
      "four-term-01",
      "four-term-02",
      "four-term-13",
      "four-term-23",
      "otherwise"};
  return kBranches;
}

Eigen::Vector4cd sample_branch_state(const std::string& branch, std::mt19937_64& rng) {
  const auto coeff = [&rng] { return random_coeff(rng, 0.3, 1.0); };
  if (branch == "bell") return bell_state(pick(rng, 4));
  if (branch == "computational-diagonal") {
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    v(pick(rng, 2) == 0 ? 0 : 3) = 1.0;
    return v;
  }
  if (branch == "computational-antidiagonal") {
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    v(pick(rng, 2) == 0 ? 1 : 2) = 1.0;
    return v;
  }
  if (branch == "two-term-diagonal" || branch == "two-term-antidiagonal") {
    const bool diag = branch == "two-term-diagonal";
    for (;;) {
      const complex<double> a = coeff();
      const complex<double> b = coeff();
      // keep both components of the pair support clear of the threshold
      if (std::abs(a + b) < 0.1 || std::abs(a - b) < 0.1) continue;
      Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
      v(diag ? 0 : 1) = a;
      v(diag ? 3 : 2) = b;
      return v.normalized();
    }
  }
  std::array<complex<double>, 4> c{0, 0, 0, 0};
  if (branch == "four-term-01") {
    c[0] = coeff();
    c[1] = coeff();
  } else if (branch == "four-term-02") {
    c[0] = coeff();
    c[2] = coeff();
  } else if (branch == "four-term-13") {
    c[1] = coeff();
    c[3] = coeff();
  } else if (branch == "four-term-23") {
    c[2] = coeff();
    c[3] = coeff();
  } else if (branch == "otherwise") {
    for (auto& z : c) z = coeff();
  } else {
    throw std::invalid_argument("unknown zoology branch: " + branch);
  }
  return state_from_components(c);
}

PauliAngles sample_satisfying(AngleConstraint c, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(-1.0, 1.0);
  PauliAngles t{ang(rng), ang(rng), ang(rng), ang(rng)};
  switch (c) {
    case AngleConstraint::kFree: break;
    case AngleConstraint::kEqual12: t[2] = t[1]; break;
    case AngleConstraint::kOpposite12: t[2] = -t[1]; break;
    case AngleConstraint::kEqual23: t[3] = t[2]; break;
    case AngleConstraint::kOpposite23: t[3] = -t[2]; break;
    case AngleConstraint::kEqual13: t[3] = t[1]; break;
    case AngleConstraint::kOpposite13: t[3] = -t[1]; break;
    case AngleConstraint::kZero: t[1] = t[2] = t[3] = 0; break;
  }
  return t;
}

AnglePair sample_violating(AngleConstraint c, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.2, 1.0);
  const double delta = (pick(rng, 2) ? 1.0 : -1.0) * mag(rng);
  AnglePair out;
  out.theta = sample_satisfying(c, rng);
  if (c == AngleConstraint::kFree) {
    out.phi = negated(out.theta);
    out.phi[1 + pick(rng, 3)] += delta;  // detune the inversion itself
    return out;
  }
  switch (c) {
    case AngleConstraint::kEqual12:
    case AngleConstraint::kOpposite12: out.theta[2] += delta; break;
    case AngleConstraint::kEqual23:
    case AngleConstraint::kOpposite23: out.theta[3] += delta; break;
    case AngleConstraint::kEqual13:
    case AngleConstraint::kOpposite13: out.theta[3] += delta; break;
    case AngleConstraint::kZero: out.theta[1 + pick(rng, 3)] = delta; break;
    default: break;
  }
  out.phi = negated(out.theta);
  return out;
}

std::vector<BranchReport> zoology_validate(int draws, std::uint64_t seed, double tol,
                                           double floor) {
  if (draws < 1) throw std::invalid_argument("zoology needs at least one draw per branch");
  std::mt19937_64 rng(seed);
  std::vector<BranchReport> out;
  for (const auto& branch : zoology_branches()) {
    BranchReport rep;
    rep.branch = branch;
    rep.draws = draws;
    rep.min_violation = std::numeric_limits<double>::infinity();
    for (int i = 0; i < draws; ++i) {
      const Eigen::Vector4cd state = sample_branch_state(branch, rng);
      const ZoologyClass cls = zoology_constraints(state);
      if (cls.branch != branch)
        throw std::logic_error("sampled state classified as '" + cls.branch +
                               "' instead of '" + branch + "'");
      const Eigen::VectorXcd in = product_pair_state(state, state);

      const PauliAngles theta = sample_satisfying(cls.constraint, rng);
      const ResidualPair ok =
          invariance_residual(in, remote_unitary(theta, negated(theta)) * in);
      rep.max_exact_residual = std::max(rep.max_exact_residual, ok.exact);
      rep.max_phase_residual = std::max(rep.max_phase_residual, ok.phase_min);

      const AnglePair bad = sample_violating(cls.constraint, rng);
      const ResidualPair viol =
          invariance_residual(in, remote_unitary(bad.theta, bad.phi) * in);
      // Bell pairs stay eigenstates of any detuned inversion, so only the
      // exact metric can see the violation there.
      const double v = (cls.constraint == AngleConstraint::kFree) ? viol.exact
                                                                  : viol.phase_min;
      rep.min_violation = std::min(rep.min_violation, v);
    }
    rep.constraint_sufficient = rep.max_exact_residual <= tol;
    rep.violations_detected = rep.min_violation >= floor;
    out.push_back(rep);
  }
  return out;
}

std::string zoology_csv(const std::vector<BranchReport>& reports) {
  std::string out = "branch,draws,max_exact_residual,max_phase_residual\n";
  char buf[160];
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof(buf), "%s,%d,%.12g,%.12g\n", r.branch.c_str(), r.draws,
                  r.max_exact_residual, r.max_phase_residual);
    out += buf;
  }
  return out;
}

}  // namespace entit
