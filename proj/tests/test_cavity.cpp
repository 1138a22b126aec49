// Copyright 2026 The Kineticon Toolkit Authors
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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "core/cavity.hpp"
#include "core/error.hpp"

using kineticon::CoupledSystem;
using kineticon::DressedSpectrum;
using kineticon::Error;
using kineticon::ErrorCode;
using kineticon::ModeFamily;
using kineticon::RectCavity;

namespace {

// mpmath oracle: 1 x 2.54 x 1.4 mm box, c = 299792458 m/s.
constexpr double kTE101 = 184208016880.15825;
constexpr double kTE011 = 122255459172.47196;
constexpr double kEps100 = 3.3932593482920666;

RectCavity paper_box(double eps = 1.0) { return RectCavity(1e-3, 2.54e-3, 1.4e-3, eps); }

}  // namespace

TEST_CASE("rectangular cavity mode frequencies") {
  const RectCavity box = paper_box();
  CHECK(kineticon::mode_frequency(box, 1, 0, 1, ModeFamily::te) ==
        doctest::Approx(kTE101).epsilon(1e-12));
  CHECK(kineticon::mode_frequency(box, 1, 0, 1, ModeFamily::te) ==
        doctest::Approx(184.2e9).epsilon(1e-3));
  CHECK(kineticon::mode_frequency(box, 0, 1, 1, ModeFamily::te) ==
        doctest::Approx(kTE011).epsilon(1e-12));
  CHECK(kineticon::mode_frequency(box, 0, 1, 1, ModeFamily::te) ==
        doctest::Approx(122.3e9).epsilon(1e-3));

  // Doubling every dimension halves every mode (powers of two are exact).
  const RectCavity big(2e-3, 5.08e-3, 2.8e-3);
  CHECK(kineticon::mode_frequency(big, 1, 0, 1, ModeFamily::te) ==
        0.5 * kineticon::mode_frequency(box, 1, 0, 1, ModeFamily::te));

  // Swapping (m, a) with (p, d) leaves the TE frequency unchanged.
  const RectCavity swapped(1.4e-3, 2.54e-3, 1e-3);
  CHECK(kineticon::mode_frequency(swapped, 1, 0, 1, ModeFamily::te) ==
        doctest::Approx(kTE101).epsilon(1e-12));

  // Monotone nonincreasing in each dimension.
  const RectCavity wider(1.1e-3, 2.54e-3, 1.4e-3);
  CHECK(kineticon::mode_frequency(wider, 1, 0, 1, ModeFamily::te) < kTE101);
}

TEST_CASE("mode index rules") {
  const RectCavity box = paper_box();
  CHECK_THROWS_AS((void)kineticon::mode_frequency(box, 0, 0, 1, ModeFamily::te), Error);
  CHECK_THROWS_AS((void)kineticon::mode_frequency(box, 1, 0, 0, ModeFamily::te), Error);
  CHECK_THROWS_AS((void)kineticon::mode_frequency(box, 0, 1, 1, ModeFamily::tm), Error);
  CHECK_THROWS_AS((void)kineticon::mode_frequency(box, -1, 1, 1, ModeFamily::te), Error);
  CHECK_NOTHROW((void)kineticon::mode_frequency(box, 1, 1, 0, ModeFamily::te));
  CHECK_NOTHROW((void)kineticon::mode_frequency(box, 1, 1, 0, ModeFamily::tm));
  try {
    (void)kineticon::mode_frequency(box, 2, 0, 0, ModeFamily::te);
    FAIL("expected mode_index");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::mode_index);
  }
}

TEST_CASE("dielectric loading to a target frequency") {
  const RectCavity box = paper_box();
  const double eps = kineticon::loading_for_target(box, 1, 0, 1, ModeFamily::te, 100e9);
  CHECK(eps == doctest::Approx(kEps100).epsilon(1e-12));

  // Round trip through mode_frequency.
  const RectCavity loaded = paper_box(eps);
  CHECK(kineticon::mode_frequency(loaded, 1, 0, 1, ModeFamily::te) ==
        doctest::Approx(100e9).epsilon(1e-14));

  // Boundary: target at the empty mode gives eps = 1; above it errors.
  CHECK(kineticon::loading_for_target(box, 1, 0, 1, ModeFamily::te, kTE101) == 1.0);
  CHECK(kineticon::loading_for_target(box, 1, 0, 1, ModeFamily::te, kTE101 / 2.0) ==
        doctest::Approx(4.0).epsilon(1e-14));
  try {
    (void)kineticon::loading_for_target(box, 1, 0, 1, ModeFamily::te, 200e9);
    FAIL("expected unreachable loading");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unreachable_loading);
  }
}

TEST_CASE("decoupled system reproduces bare frequencies exactly") {
  CoupledSystem sys;
  sys.f_cavity_hz = 100e9;
  sys.f_qubit_hz = 97e9;
  sys.g_hz = 0.0;
  sys.lambda_q = 0.0;
  const DressedSpectrum d = kineticon::dressed_spectrum(sys);
  CHECK(d.f_cavity_dressed == doctest::Approx(100e9).epsilon(1e-12));
  CHECK(d.f_qubit_dressed == doctest::Approx(97e9).epsilon(1e-12));
  CHECK(std::abs(d.chi_hz) < 1e-3);
  CHECK(d.levels.front() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("vacuum Rabi splitting of the degenerate doublet") {
  CoupledSystem sys;
  sys.f_cavity_hz = 100e9;
  sys.f_qubit_hz = 100e9;
  sys.g_hz = 1e8;
  sys.lambda_q = 0.0;
  const DressedSpectrum d = kineticon::dressed_spectrum(sys);
  // One-excitation doublet at f +- g.
  CHECK(d.levels[1] == doctest::Approx(100e9 - 1e8).epsilon(1e-10));
  CHECK(d.levels[2] == doctest::Approx(100e9 + 1e8).epsilon(1e-10));
  CHECK((d.levels[2] - d.levels[1]) == doctest::Approx(2e8).epsilon(1e-6));
}

TEST_CASE("one-excitation block matches the 2x2 closed form") {
  CoupledSystem sys;
  sys.f_cavity_hz = 101e9;
  sys.f_qubit_hz = 98.5e9;
  sys.g_hz = 3e8;
  sys.lambda_q = 0.0;
  const DressedSpectrum d = kineticon::dressed_spectrum(sys);
  const double mean = 0.5 * (sys.f_cavity_hz + sys.f_qubit_hz);
  const double half = 0.5 * (sys.f_cavity_hz - sys.f_qubit_hz);
  const double rabi = std::sqrt(sys.g_hz * sys.g_hz + half * half);
  CHECK(d.levels[1] == doctest::Approx(mean - rabi).epsilon(1e-10));
  CHECK(d.levels[2] == doctest::Approx(mean + rabi).epsilon(1e-10));
}

TEST_CASE("dispersive chi agrees with the second-order estimate within 10%") {
  CoupledSystem sys;
  sys.f_qubit_hz = 100e9;
  sys.lambda_q = -1e-3;
  sys.g_hz = 1e8;
  sys.f_cavity_hz = sys.f_qubit_hz + 10.0 * sys.g_hz;
  sys.dim_cavity = 6;
  sys.dim_qubit = 14;
  const DressedSpectrum d = kineticon::dressed_spectrum(sys);
  const double chi_est = kineticon::chi_perturbative(sys);
  CHECK(chi_est != 0.0);
  CHECK(d.chi_hz == doctest::Approx(chi_est).epsilon(0.10));
  // Harmonic qubit: no dispersive pull at all.
  CoupledSystem harm = sys;
  harm.lambda_q = 0.0;
  CHECK(std::abs(kineticon::dressed_spectrum(harm).chi_hz) < 1e-6 * std::abs(d.chi_hz) + 1.0);
}

TEST_CASE("dressed spectrum validates inputs and warns on large g") {
  CoupledSystem sys;
  sys.f_cavity_hz = 100e9;
  sys.f_qubit_hz = 100e9;
  sys.dim_cavity = 1;
  CHECK_THROWS_AS((void)kineticon::dressed_spectrum(sys), Error);
  sys.dim_cavity = 6;
  sys.g_hz = 10e9;  // g/f = 0.1
  kineticon::Diagnostics diag;
  (void)kineticon::dressed_spectrum(sys, &diag);
  CHECK(!diag.warnings.empty());
}

TEST_CASE("coupled transmission line shape") {
  CoupledSystem sys;
  sys.f_cavity_hz = 100e9;
  sys.f_qubit_hz = 100e9;
  sys.kappa1_hz = 5e6;
  sys.kappa2_hz = 5e6;
  sys.gamma_hz = 1e6;
  sys.g_hz = 0.0;

  // Matched symmetric cavity peaks at |S21| = 1 and rolls off far away.
  CHECK(std::abs(kineticon::s21_coupled_at(sys, 100e9)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(kineticon::s21_coupled_at(sys, 102e9)) < 1e-2);

  // g >> kappa, gamma: two peaks split by 2g within 2%.
  sys.g_hz = 5e8;
  std::vector<double> freqs;
  const double f0 = 99e9, f1 = 101e9;
  const std::size_t n = 40001;
  for (std::size_t i = 0; i < n; ++i)
    freqs.push_back(f0 + (f1 - f0) * static_cast<double>(i) / (n - 1));
  const auto response = kineticon::s21_coupled(sys, freqs);
  // Peak finding on the closed form.
  std::vector<double> peaks;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double prev = std::abs(response[i - 1].second);
    const double here = std::abs(response[i].second);
    const double next = std::abs(response[i + 1].second);
    if (here > prev && here > next && here > 0.2) peaks.push_back(response[i].first);
  }
  REQUIRE(peaks.size() == 2);
  CHECK(peaks[1] - peaks[0] == doctest::Approx(2.0 * sys.g_hz).epsilon(0.02));

  // |S21| <= 1 when the ports dominate every other linewidth.
  for (const auto& [f, s] : response) CHECK(std::abs(s) <= 1.0 + 1e-12);

  CHECK_THROWS_AS((void)kineticon::s21_coupled_at(CoupledSystem{}, 1e9), Error);
}
