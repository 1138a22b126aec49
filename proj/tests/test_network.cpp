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
#include <complex>
#include <numbers>
#include <vector>

#include "core/constants.hpp"
#include "core/error.hpp"
#include "core/network.hpp"

using kineticon::Abcd;
using kineticon::Complex;
using kineticon::Error;
using kineticon::ErrorCode;
using kineticon::HalfwaveDesign;
using kineticon::NetworkElement;
using kineticon::ResonatorNetwork;
using kineticon::SweepPoint;

namespace {

constexpr double kC0 = kineticon::constants::speed_of_light_m_s;

HalfwaveDesign design_with(double l0k, double istar, double cc = 1e-15) {
  HalfwaveDesign d;
  d.coupling_c_f = cc;
  d.nanowire = kineticon::NanowireParams{l0k, istar};
  return d;
}

double mag(const Complex& z) { return std::abs(z); }

}  // namespace

TEST_CASE("elemental ABCD matrices") {
  const double f = 100e9;
  // Zero-length line and zero series impedance are identities.
  const Abcd line0 = kineticon::abcd(kineticon::make_line(50.0, kC0 / 2.0, 0.0), f);
  CHECK(line0.a == Complex{1.0, 0.0});
  CHECK(line0.b == Complex{0.0, 0.0});
  CHECK(line0.c == Complex{0.0, 0.0});
  const Abcd series0 = kineticon::abcd(kineticon::make_series_resistor(0.0), f);
  CHECK(series0.b == Complex{0.0, 0.0});
  CHECK(series0.a == Complex{1.0, 0.0});

  // Quarter-wave lossless line: [[0, jZ0], [j/Z0, 0]].
  const double v = kC0 / 2.0;
  const double quarter = v / (4.0 * f);
  const Abcd q = kineticon::abcd(kineticon::make_line(70.0, v, quarter), f);
  CHECK(std::abs(q.a) < 1e-12);
  CHECK(std::abs(q.d) < 1e-12);
  CHECK(q.b.imag() == doctest::Approx(70.0).epsilon(1e-12));
  CHECK(q.c.imag() == doctest::Approx(1.0 / 70.0).epsilon(1e-12));

  // det = 1 for reciprocal elements.
  for (const NetworkElement& e :
       {kineticon::make_line(35.0, kC0 / 3.0, 1e-3, 0.7), kineticon::make_series_inductor(1e-11),
        kineticon::make_shunt_capacitor(2e-15), kineticon::make_series_capacitor(1e-15),
        kineticon::make_shunt_inductor(1e-10), kineticon::make_shunt_resistor(100.0)}) {
    const Abcd m = kineticon::abcd(e, f);
    CHECK(std::abs(m.det() - Complex{1.0, 0.0}) < 1e-12);
  }

  CHECK_THROWS_AS(kineticon::abcd(kineticon::make_line(50.0, kC0 / 2.0, 1e-3), -1.0), Error);
  CHECK_THROWS_AS((void)kineticon::make_line(50.0, 2.0 * kC0, 1e-3), Error);
  CHECK_THROWS_AS((void)kineticon::make_line(-50.0, kC0 / 2.0, 1e-3), Error);
}

TEST_CASE("cascade is the ordered product; line lengths add") {
  const double f = 80e9;
  const double v = kC0 / 2.5;
  std::vector<NetworkElement> one{kineticon::make_series_inductor(2e-12)};
  const Abcd m1 = kineticon::cascade(one, f);
  const Abcd e1 = kineticon::abcd(one[0], f);
  CHECK(m1.b == e1.b);

  std::vector<NetworkElement> two{kineticon::make_line(50.0, v, 3e-4),
                                  kineticon::make_line(50.0, v, 5e-4)};
  const Abcd joined = kineticon::cascade(two, f);
  const Abcd direct = kineticon::abcd(kineticon::make_line(50.0, v, 8e-4), f);
  CHECK(std::abs(joined.a - direct.a) < 1e-12);
  CHECK(std::abs(joined.b - direct.b) < 1e-12 * std::abs(direct.b));
  CHECK(std::abs(joined.det() - Complex{1.0, 0.0}) < 1e-12);

  CHECK_THROWS_AS(kineticon::cascade(std::span<const NetworkElement>{}, f), Error);
}

TEST_CASE("scattering from ABCD") {
  const double zr = 50.0;
  const Abcd identity;
  CHECK(kineticon::s21(identity, zr) == Complex{1.0, 0.0});

  // Series Z = Zref -> S21 = 2/3.
  const Abcd series = kineticon::abcd(kineticon::make_series_resistor(zr), 1e9);
  CHECK(kineticon::s21(series, zr).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

  // Matched quarter-wave line is all-pass.
  const double v = kC0 / 2.0;
  const Abcd q = kineticon::abcd(kineticon::make_line(zr, v, v / (4.0 * 100e9)), 100e9);
  CHECK(mag(kineticon::s21(q, zr)) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(kineticon::s21(identity, -50.0), Error);
}

TEST_CASE("reciprocity and losslessness across a resonator sweep") {
  const ResonatorNetwork net = kineticon::make_halfwave_resonator(design_with(5e-12, 2e-5));
  const ResonatorNetwork rev = kineticon::reversed_network(net);
  const auto sweep = kineticon::sweep_s21(net, 90e9, 110e9, 401);
  const auto sweep_rev = kineticon::sweep_s21(rev, 90e9, 110e9, 401);
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    CHECK(std::abs(sweep[i].s21 - sweep_rev[i].s21) <= 1e-12);
    const Complex refl = kineticon::s11(
        kineticon::network_abcd(net, sweep[i].f_hz, net.nanowire.l0k_h), net.zref_ohm);
    CHECK(std::norm(refl) + std::norm(sweep[i].s21) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("matched line without couplers is all-pass") {
  ResonatorNetwork net;
  const double v = kC0 / std::sqrt(6.45);
  net.elements = {kineticon::make_line(50.0, v, v / 2e11), kineticon::make_line(50.0, v, v / 2e11)};
  net.nanowire_index = 1;
  net.nanowire = kineticon::NanowireParams{1e-20, 1e-3};  // negligible inductor
  net.zref_ohm = 50.0;
  for (double f : {60e9, 100e9, 140e9})
    CHECK(mag(kineticon::network_s21(net, f, net.nanowire.l0k_h)) ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("synthetic Lorentzian dip recovery") {
  const double f0 = 100e9;
  const double q = 1e4;
  const double smin = 0.05;
  std::vector<SweepPoint> points;
  const double span = 10.0 * f0 / q;
  const std::size_t n = 1001;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = f0 - span / 2.0 + span * static_cast<double>(i) / (n - 1);
    const Complex s = 1.0 - (1.0 - smin) / (1.0 + Complex{0.0, 2.0 * q * (f - f0) / f0});
    points.push_back(SweepPoint{f, s});
  }
  const auto r = kineticon::find_resonance(points);
  CHECK(r.is_dip);
  CHECK(std::abs(r.f0_hz - f0) <= 1e-6 * f0);
  CHECK(r.q_loaded == doctest::Approx(q).epsilon(0.01));
  CHECK(r.s21_min == doctest::Approx(smin).epsilon(1e-3));

  // Grid independence: halving the step moves f0 by < 1e-7 relative.
  std::vector<SweepPoint> fine;
  for (std::size_t i = 0; i < 2 * n - 1; ++i) {
    const double f = f0 - span / 2.0 + span * static_cast<double>(i) / (2 * n - 2);
    const Complex s = 1.0 - (1.0 - smin) / (1.0 + Complex{0.0, 2.0 * q * (f - f0) / f0});
    fine.push_back(SweepPoint{f, s});
  }
  CHECK(std::abs(kineticon::find_resonance(fine).f0_hz - r.f0_hz) <= 1e-7 * f0);
}

TEST_CASE("find_resonance rejects flat, edge and multi-feature data") {
  std::vector<SweepPoint> flat;
  for (int i = 0; i < 100; ++i) flat.push_back(SweepPoint{1e9 + i * 1e6, Complex{0.5, 0.0}});
  CHECK_THROWS_AS((void)kineticon::find_resonance(flat), Error);

  // Two well-separated dips.
  std::vector<SweepPoint> twin;
  const double fa = 95e9, fb = 105e9, q = 3e3;
  for (int i = 0; i < 4001; ++i) {
    const double f = 90e9 + i * (20e9 / 4000.0);
    const Complex da = 1.0 - 0.9 / (1.0 + Complex{0.0, 2.0 * q * (f - fa) / fa});
    const Complex db = 1.0 - 0.9 / (1.0 + Complex{0.0, 2.0 * q * (f - fb) / fb});
    twin.push_back(SweepPoint{f, da * db});
  }
  try {
    (void)kineticon::find_resonance(twin);
    FAIL("expected ambiguous resonance");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ambiguous_resonance);
  }
}

TEST_CASE("resonance of the default half-wave resonator") {
  const double l0k = 5e-12;
  const ResonatorNetwork net = kineticon::make_halfwave_resonator(design_with(l0k, 2e-5));
  const auto sweep = kineticon::sweep_s21(net, 90e9, 105e9, 8001);
  const auto r = kineticon::find_resonance(sweep);
  CHECK(!r.is_dip);  // transmission peak
  // Nanowire pulls the resonance below the 100 GHz design value.
  CHECK(r.f0_hz < 100e9);
  CHECK(r.f0_hz > 95e9);
  CHECK(r.q_loaded > 0.0);

  // Stronger coupling loads the resonator harder.
  const ResonatorNetwork stronger =
      kineticon::make_halfwave_resonator(design_with(l0k, 2e-5, 2e-15));
  const auto sweep2 = kineticon::sweep_s21(stronger, 85e9, 105e9, 8001);
  const auto r2 = kineticon::find_resonance(sweep2);
  CHECK(r2.q_loaded < r.q_loaded);
}

TEST_CASE("series inductor at the current antinode: perturbative shift formula") {
  // delta_f / f0 = -L_nw / (2 L_eq) with L_eq = (Z0/(2 pi f0)) * (pi/2), the
  // energy-equivalent series inductance of the half-wave mode at its current
  // antinode (docs/resonator_model.md). Weak couplers, small participation.
  const double z0 = 50.0;
  const double f_design = 100e9;
  const double l_nw = 5e-12;

  HalfwaveDesign tiny = design_with(1e-19, 1e-3, 0.2e-15);
  const ResonatorNetwork bare = kineticon::make_halfwave_resonator(tiny);
  HalfwaveDesign loaded_d = design_with(l_nw, 1e-3, 0.2e-15);
  const ResonatorNetwork loaded = kineticon::make_halfwave_resonator(loaded_d);

  const auto rb = kineticon::find_resonance(kineticon::sweep_s21(bare, 96e9, 103e9, 20001));
  const auto rl = kineticon::find_resonance(kineticon::sweep_s21(loaded, 93e9, 103e9, 20001));
  const double measured = rl.f0_hz - rb.f0_hz;

  const double l_eq = z0 / (2.0 * std::numbers::pi * f_design) * (std::numbers::pi / 2.0);
  const double predicted = -rb.f0_hz * l_nw / (2.0 * l_eq);
  REQUIRE(l_nw / (2.0 * l_eq) < 0.05);
  CHECK(measured == doctest::Approx(predicted).epsilon(0.05));
}
