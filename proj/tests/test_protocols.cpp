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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "entit/protocols.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

double column(const entit::Table& t, const std::string& name, int row) {
  for (std::size_t c = 0; c < t.columns.size(); ++c)
    if (t.columns[c] == name) return t.rows[row][c];
  throw std::logic_error("column not found: " + name);
}

}  // namespace

TEST_CASE("output pair-squeezing coefficients") {
  SECTION("zero angles leave the inputs untouched") {
    const entit::OutputTwbCoefficients c = entit::output_twb_coefficients(0.8, 0.3, 0, 0);
    REQUIRE(c.c12 == 0.8);
    REQUIRE(c.c34 == 0.3);
    REQUIRE(c.c13 == 0.0);
    REQUIRE(c.c24 == 0.0);
  }

  SECTION("equal squeezing at balanced angles passes through") {
    const entit::OutputTwbCoefficients c =
        entit::output_twb_coefficients(0.5, 0.5, kPi / 4, kPi / 4);
    REQUIRE(c.c12 == Catch::Approx(0.5).margin(1e-15));
    REQUIRE(c.c34 == Catch::Approx(0.5).margin(1e-15));
    REQUIRE(std::abs(c.c13) <= 1e-15);
    REQUIRE(std::abs(c.c24) <= 1e-15);
  }

  SECTION("opposite squeezing at balanced angles moves to the crossed pairs") {
    const entit::OutputTwbCoefficients c =
        entit::output_twb_coefficients(0.5, -0.5, kPi / 4, kPi / 4);
    REQUIRE(std::abs(c.c12) <= 1e-15);
    REQUIRE(std::abs(c.c34) <= 1e-15);
    REQUIRE(c.c13 == Catch::Approx(0.5).margin(1e-15));
    REQUIRE(c.c24 == Catch::Approx(0.5).margin(1e-15));
  }

  SECTION("equal angles with unequal squeezing leave (r-s) cos sin residue") {
    for (double phi : {0.3, kPi / 4, 1.1}) {
      const entit::OutputTwbCoefficients c =
          entit::output_twb_coefficients(0.7, 0.2, phi, phi);
      const double residue = (0.7 - 0.2) * std::cos(phi) * std::sin(phi);
      REQUIRE(c.c13 == Catch::Approx(residue).margin(1e-15));
      REQUIRE(c.c24 == Catch::Approx(residue).margin(1e-15));
      REQUIRE(std::abs(c.c13) > 1e-9);  // no perfect swap at equal angles
    }
  }

  SECTION("general angles follow the four bilinear combinations") {
    const double r = 0.8, s = 0.3, phi = 0.5, psi = 1.1;
    const entit::OutputTwbCoefficients c = entit::output_twb_coefficients(r, s, phi, psi);
    REQUIRE(c.c12 ==
            Catch::Approx(r * std::cos(phi) * std::cos(psi) +
                          s * std::sin(phi) * std::sin(psi)).margin(1e-15));
    REQUIRE(c.c34 ==
            Catch::Approx(r * std::sin(phi) * std::sin(psi) +
                          s * std::cos(phi) * std::cos(psi)).margin(1e-15));
    REQUIRE(c.c13 ==
            Catch::Approx(r * std::cos(phi) * std::sin(psi) -
                          s * std::sin(phi) * std::cos(psi)).margin(1e-15));
    REQUIRE(c.c24 ==
            Catch::Approx(r * std::sin(phi) * std::cos(psi) -
                          s * std::cos(phi) * std::sin(psi)).margin(1e-15));
  }
}

TEST_CASE("output classification") {
  entit::OutputTwbCoefficients c;
  c.c12 = 0.5;
  c.c34 = 0.5;
  REQUIRE(entit::classify_output(c) == entit::OutputClass::kTransparent);
  REQUIRE(std::string(entit::to_string(entit::OutputClass::kTransparent)) == "transparent");

  c.c13 = 5e-10;  // below the default tolerance: still transparent
  REQUIRE(entit::classify_output(c) == entit::OutputClass::kTransparent);
  REQUIRE(entit::classify_output(c, 1e-12) == entit::OutputClass::kGeneric);

  entit::OutputTwbCoefficients swap;
  swap.c13 = 0.4;
  swap.c24 = 0.4;
  REQUIRE(entit::classify_output(swap) == entit::OutputClass::kSwapped);
  REQUIRE(std::string(entit::to_string(entit::OutputClass::kSwapped)) == "swapped");

  entit::OutputTwbCoefficients both;
  both.c12 = 0.2;
  both.c13 = 0.1;
  REQUIRE(entit::classify_output(both) == entit::OutputClass::kGeneric);
  REQUIRE(std::string(entit::to_string(entit::OutputClass::kGeneric)) == "generic");
}

TEST_CASE("loss channel parameters") {
  REQUIRE_THROWS_AS(entit::LossChannel(-0.01), std::invalid_argument);
  REQUIRE_THROWS_AS(entit::LossChannel(1.01), std::invalid_argument);

  REQUIRE(entit::LossChannel(0.0).angle() == 0.0);
  REQUIRE(entit::LossChannel(1.0).angle() == Catch::Approx(kPi / 2).margin(1e-12));

  const entit::LossChannel ch(0.19);
  REQUIRE(ch.angle() == Catch::Approx(std::acos(0.9)).margin(1e-12));
  const double t = std::cos(ch.angle());
  REQUIRE(t * t == Catch::Approx(1.0 - 0.19).margin(1e-12));
}

TEST_CASE("separability scan across the bath-squeezing ratio") {
  const double r = 0.7;
  const entit::Table t = entit::separability_scan(r, 81);

  REQUIRE(t.columns == std::vector<std::string>{"x", "kappa12", "kappa13"});
  REQUIRE(t.rows.size() == 81);
  REQUIRE(column(t, "x", 0) == Catch::Approx(-1.0).margin(1e-15));
  REQUIRE(column(t, "x", 80) == Catch::Approx(1.0).margin(1e-15));
  REQUIRE(column(t, "x", 40) == Catch::Approx(0.0).margin(1e-15));

  SECTION("endpoints carry the closed-form eigenvalues") {
    // x = +1: the network is transparent, pair (1,2) keeps its squeezing
    // while modes (1,3) are uncorrelated thermal states.
    REQUIRE(column(t, "kappa12", 80) ==
            Catch::Approx(std::exp(-1.4) / 2.0).margin(1e-9));
    REQUIRE(column(t, "kappa13", 80) ==
            Catch::Approx(std::cosh(1.4) / 2.0).margin(1e-9));
    // x = -1: full swap, the roles exchange.
    REQUIRE(column(t, "kappa12", 0) ==
            Catch::Approx(std::cosh(1.4) / 2.0).margin(1e-9));
    REQUIRE(column(t, "kappa13", 0) ==
            Catch::Approx(std::exp(-1.4) / 2.0).margin(1e-9));
  }

  SECTION("the two pair curves are mirror images in x") {
    for (int i = 0; i < 81; ++i) {
      REQUIRE(std::abs(column(t, "kappa12", i) - column(t, "kappa13", 80 - i)) <= 1e-12);
    }
  }

  SECTION("an interval exists where both pairings are entangled") {
    int both = 0;
    for (int i = 0; i < 81; ++i) {
      if (column(t, "kappa12", i) < 0.5 && column(t, "kappa13", i) < 0.5) ++both;
    }
    REQUIRE(both > 0);
  }

  SECTION("a two-point grid returns just the endpoints") {
    const entit::Table tiny = entit::separability_scan(0.4, 2);
    REQUIRE(tiny.rows.size() == 2);
    REQUIRE(column(tiny, "x", 0) == -1.0);
    REQUIRE(column(tiny, "x", 1) == 1.0);
  }
}

TEST_CASE("reduced-pair fidelity and its expansions") {
  SECTION("equal angles match the closed form") {
    for (auto [r, s, phi] : {std::tuple<double, double, double>{0.5, 0.2, kPi / 4},
                             std::tuple<double, double, double>{0.7, 0.3, 0.6},
                             std::tuple<double, double, double>{0.4, 0.4, 1.0}}) {
      const double sh = std::sinh(r - s);
      const double f =
          1.0 / (1.0 + (1.0 + std::pow(std::cos(phi), 2)) * std::pow(std::sin(phi), 2) * sh * sh);
      REQUIRE(entit::reduced_pair_fidelity(r, s, phi, phi) ==
              Catch::Approx(f).margin(1e-12));
    }
    REQUIRE(entit::reduced_pair_fidelity(0.6, 0.6, 0.9, 0.9) ==
            Catch::Approx(1.0).margin(1e-12));
  }

  SECTION("squeezing-detuning expansion fixed points") {
    REQUIRE(entit::fidelity_expansion_sq(0.5, 0.5, 0.77) == 1.0);
    // sin(phi) = 0 collapses the bracket to 3.
    REQUIRE(entit::fidelity_expansion_sq(0.5, 0.6, 0.0) ==
            Catch::Approx(1.0 - 1.5 * 0.01).margin(1e-15));
    REQUIRE(entit::fidelity_expansion_sq(0.5, 0.6, kPi / 4) ==
            Catch::Approx(1.0 - 0.5 * 3.0 * 0.01).margin(1e-15));
  }

  SECTION("squeezing-detuning expansion error is quadratic, not cubic") {
    // The exact fidelity is an even function of (s - r), so the printed
    // second-order coefficient leaves a residual that shrinks by 100x per
    // epsilon decade (log-log slope 2).
    auto err = [](double eps) {
      return std::abs(entit::reduced_pair_fidelity(0.5, 0.5 + eps, kPi / 4, kPi / 4) -
                      entit::fidelity_expansion_sq(0.5, 0.5 + eps, kPi / 4));
    };
    const double e1 = err(1e-1), e2 = err(1e-2), e3 = err(1e-3);
    REQUIRE(e2 == Catch::Approx(7.5e-5).epsilon(0.05));
    REQUIRE(e1 / e2 == Catch::Approx(100.0).epsilon(0.15));
    REQUIRE(e2 / e3 == Catch::Approx(100.0).epsilon(0.05));
  }

  SECTION("angle-detuning expansion fixed points") {
    const double f = entit::fidelity_expansion_bs(0.7, 0.3, kPi / 4, kPi / 4);
    const double sh = std::sinh(0.4);
    REQUIRE(f == Catch::Approx(1.0 / (1.0 + 1.5 * 0.5 * sh * sh)).margin(1e-15));
    REQUIRE(entit::fidelity_expansion_bs(0.4, 0.4, 0.9, 0.3) == 1.0);
  }

  SECTION("angle-detuning expansion error is quadratic") {
    auto err = [](double delta) {
      return std::abs(
          entit::reduced_pair_fidelity(0.7, 0.3, kPi / 4, kPi / 4 + delta) -
          entit::fidelity_expansion_bs(0.7, 0.3, kPi / 4, kPi / 4 + delta));
    };
    const double e1 = err(1e-1), e2 = err(1e-2), e3 = err(1e-3);
    REQUIRE(e1 / e2 == Catch::Approx(100.0).epsilon(0.2));
    REQUIRE(e2 / e3 == Catch::Approx(100.0).epsilon(0.1));
  }
}

TEST_CASE("bath-engineering recovery curve") {
  SECTION("columns, grid and the lossless limit") {
    const entit::Table t = entit::bath_recovery_curve(0.5, 0.0, 11);
    REQUIRE(t.columns == std::vector<std::string>{"s", "Ef", "purity"});
    REQUIRE(t.rows.size() == 11);
    REQUIRE(column(t, "s", 0) == 0.0);
    REQUIRE(column(t, "s", 10) == Catch::Approx(0.75).margin(1e-15));
    // Without loss the bath never touches the signal pair.
    const double ef_free = entit::entanglement_of_formation(std::exp(-1.0) / 2.0);
    for (int i = 0; i < 11; ++i) {
      REQUIRE(column(t, "Ef", i) == Catch::Approx(ef_free).margin(1e-10));
      REQUIRE(column(t, "purity", i) == Catch::Approx(1.0).margin(1e-10));
    }
  }

  SECTION("matched bath squeezing restores the state exactly") {
    for (double gamma : {0.01, 0.1, 0.35}) {
      const entit::Table t = entit::bath_recovery_curve(0.5, gamma, 3);
      // s-grid {0, 0.375, 0.75} does not contain s = r, so evaluate the
      // matched point through a dedicated two-point call at r = s grid end.
      const entit::Table matched = entit::bath_recovery_curve(0.5, gamma, 4);
      REQUIRE(column(matched, "s", 2) == Catch::Approx(0.5).margin(1e-15));
      REQUIRE(column(matched, "Ef", 2) ==
              Catch::Approx(0.6594529591680367).margin(1e-9));
      REQUIRE(column(matched, "purity", 2) == Catch::Approx(1.0).margin(1e-9));
      REQUIRE(t.rows.size() == 3);
    }
  }

  SECTION("frozen midpoint of the degraded curve") {
    const entit::Table t = entit::bath_recovery_curve(0.5, 0.05, 2);
    REQUIRE(column(t, "s", 0) == 0.0);
    REQUIRE(column(t, "Ef", 0) == Catch::Approx(0.585370).margin(1e-5));
    REQUIRE(column(t, "purity", 0) == Catch::Approx(0.950939).margin(1e-5));
  }

  SECTION("recovery improves monotonically towards the matched bath") {
    const entit::Table t = entit::bath_recovery_curve(0.5, 0.1, 21);
    for (int i = 1; i < 21; ++i) {
      if (column(t, "s", i) > 0.5 + 1e-12) break;
      REQUIRE(column(t, "Ef", i) >= column(t, "Ef", i - 1) - 1e-12);
      REQUIRE(column(t, "purity", i) >= column(t, "purity", i - 1) - 1e-12);
    }
  }

  SECTION("more loss means less recovered entanglement") {
    const double weak = column(entit::bath_recovery_curve(0.5, 0.01, 2), "Ef", 0);
    const double strong = column(entit::bath_recovery_curve(0.5, 0.1, 2), "Ef", 0);
    REQUIRE(weak > strong);
  }

  SECTION("loss outside [0,1] is rejected") {
    REQUIRE_THROWS_AS(entit::bath_recovery_curve(0.5, -0.1, 11), std::invalid_argument);
    REQUIRE_THROWS_AS(entit::bath_recovery_curve(0.5, 1.2, 11), std::invalid_argument);
  }
}

TEST_CASE("cross-engine report") {
  SECTION("transparent point") {
    const entit::EntitReport rep = entit::entit_report(0.5, 0.5, kPi / 4, kPi / 4, 16);
    REQUIRE(rep.classification == entit::OutputClass::kTransparent);
    REQUIRE(rep.within_tolerance);
    REQUIRE(rep.first_failure.empty());
    REQUIRE(rep.transparency_residual < 1e-12);
    REQUIRE(rep.cm_roundtrip_error < 1e-10);
    REQUIRE(rep.fock_residual < 1e-9);
    REQUIRE(rep.state_overlap >= 1.0 - 1e-9);
    REQUIRE(rep.fidelity_gauss == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(rep.fidelity_gap < 1e-6);
    REQUIRE(rep.dropped_weight < 1e-9);

    const std::string text = entit::format_report(rep);
    REQUIRE(text.find("classification: transparent") != std::string::npos);
    REQUIRE(text.find("verdict:") != std::string::npos);
  }

  SECTION("swapped point") {
    const entit::EntitReport rep = entit::entit_report(0.5, -0.5, kPi / 4, kPi / 4, 16);
    REQUIRE(rep.classification == entit::OutputClass::kSwapped);
    REQUIRE(rep.within_tolerance);
    REQUIRE(rep.state_overlap >= 1.0 - 1e-8);
    REQUIRE(rep.fock_residual < 1e-8);
    REQUIRE(rep.cm_roundtrip_error < 1e-10);
  }

  SECTION("generic point") {
    const entit::EntitReport rep = entit::entit_report(0.5, 0.2, kPi / 4, kPi / 4, 16);
    REQUIRE(rep.classification == entit::OutputClass::kGeneric);
    REQUIRE(std::isnan(rep.cm_roundtrip_error));
    REQUIRE(std::isnan(rep.fock_residual));
    REQUIRE(std::isnan(rep.state_overlap));
    REQUIRE(rep.fidelity_gauss < 1.0);
    REQUIRE(rep.fidelity_gauss ==
            Catch::Approx(entit::reduced_pair_fidelity(0.5, 0.2, kPi / 4, kPi / 4))
                .margin(1e-12));
    REQUIRE(rep.fidelity_gap < 1e-6);
    REQUIRE(rep.within_tolerance);
  }

  SECTION("transparency holds across angles at equal squeezing") {
    for (double angle : {0.31, 0.78, 1.21}) {
      const entit::EntitReport rep = entit::entit_report(0.45, 0.45, angle, angle, 12);
      REQUIRE(rep.classification == entit::OutputClass::kTransparent);
      REQUIRE(rep.within_tolerance);
      REQUIRE(rep.fock_residual < 1e-8);
    }
  }
}

TEST_CASE("scan output is independent of the worker count") {
  setenv("ENTIT_MAX_WORKERS", "1", 1);
  const std::string serial = entit::to_csv(entit::separability_scan(0.6, 41));
  setenv("ENTIT_MAX_WORKERS", "7", 1);
  const std::string parallel = entit::to_csv(entit::separability_scan(0.6, 41));
  unsetenv("ENTIT_MAX_WORKERS");
  REQUIRE(serial == parallel);
  REQUIRE(serial == entit::to_csv(entit::separability_scan(0.6, 41)));
}
