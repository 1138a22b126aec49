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
#include <numbers>

#include "core/constants.hpp"
#include "core/error.hpp"
#include "core/network.hpp"

using kineticon::DuffingResult;
using kineticon::Error;
using kineticon::ErrorCode;
using kineticon::HalfwaveDesign;
using kineticon::ResonatorNetwork;

namespace {

constexpr double kPlanck = kineticon::constants::planck_j_s;

ResonatorNetwork duffing_network() {
  HalfwaveDesign d;
  d.nanowire = kineticon::NanowireParams{1e-11, 2e-5};
  return kineticon::make_halfwave_resonator(d);
}

// Ideal transmission-line oracle for the lumped-equivalent circuit of the
// loaded half-wave mode (docs/resonator_model.md). The series reactance at
// the nanowire location is X(w) = w L_nw - 2 Z0 cot(pi w / (2 w_h)); its
// zero is the loaded resonance and L_eq = (1/2) dX/dw the energy-equivalent
// series inductance there.
struct LumpedEquivalent {
  double f0;
  double l_eq;
  double lambda;
};

LumpedEquivalent lumped_equivalent(double z0, double f_halfwave, double l_nw, double istar) {
  const double w_h = 2.0 * std::numbers::pi * f_halfwave;
  auto reactance = [&](double w) {
    return w * l_nw - 2.0 * z0 / std::tan(std::numbers::pi * w / (2.0 * w_h));
  };
  double lo = 0.5 * w_h, hi = 0.999999 * w_h;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (reactance(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double w0 = 0.5 * (lo + hi);
  const double dw = 1e-6 * w0;
  const double l_eq = 0.5 * (reactance(w0 + dw) - reactance(w0 - dw)) / (2.0 * dw);
  const double f0 = w0 / (2.0 * std::numbers::pi);
  const double lambda = -kPlanck * f0 * l_nw / (2.0 * l_eq * l_eq * istar * istar);
  return LumpedEquivalent{f0, l_eq, lambda};
}

}  // namespace

TEST_CASE("zero drive leaves the small-signal resonance") {
  const ResonatorNetwork net = duffing_network();
  const DuffingResult r = kineticon::duffing_shift(net, 0.0);
  CHECK(r.converged);
  CHECK(r.delta_f_hz == 0.0);
  CHECK(r.n_photons == 0.0);
  CHECK(r.f0_shifted_hz == r.f0_small_hz);
  CHECK(r.f0_small_hz > 90e9);
  CHECK(r.f0_small_hz < 100e9);
}

TEST_CASE("low-power shift is linear in power and softening") {
  const ResonatorNetwork net = duffing_network();
  const DuffingResult r1 = kineticon::duffing_shift(net, 1e-16);
  const DuffingResult r2 = kineticon::duffing_shift(net, 2e-16);
  CHECK(r1.converged);
  CHECK(r2.converged);
  CHECK(r1.delta_f_hz < 0.0);
  CHECK(r2.delta_f_hz < 0.0);
  CHECK(r2.delta_f_hz / r1.delta_f_hz == doctest::Approx(2.0).epsilon(0.02));
  CHECK(r2.n_photons / r1.n_photons == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("shift per photon matches the lumped-equivalent quantum oracle within 20%") {
  const ResonatorNetwork net = duffing_network();
  const LumpedEquivalent eq = lumped_equivalent(50.0, 100e9, 1e-11, 2e-5);
  const double expected = 3.0 * eq.lambda * eq.f0;

  const DuffingResult r = kineticon::duffing_shift(net, 1e-16);
  REQUIRE(r.n_photons > 0.0);
  const double per_photon = r.delta_f_hz / r.n_photons;
  CHECK(per_photon < 0.0);
  CHECK(per_photon == doctest::Approx(expected).epsilon(0.20));
}

TEST_CASE("shift stays negative at every convergent power") {
  const ResonatorNetwork net = duffing_network();
  for (double p = 1e-17; p <= 1e-12; p *= 10.0) {
    try {
      const DuffingResult r = kineticon::duffing_shift(net, p);
      CHECK(r.delta_f_hz < 0.0);
      CHECK(r.l_k_h > net.nanowire.l0k_h);
    } catch (const Error&) {
      break;  // beyond the critical drive; covered below
    }
  }
}

TEST_CASE("an error (not a silent value) appears beyond the critical drive") {
  const ResonatorNetwork net = duffing_network();
  bool errored = false;
  for (double p = 1e-15; p <= 1e-7; p *= 10.0) {
    try {
      (void)kineticon::duffing_shift(net, p);
    } catch (const Error& e) {
      errored = true;
      const bool expected_kind = e.code() == ErrorCode::validity ||
                                 e.code() == ErrorCode::bifurcation ||
                                 e.code() == ErrorCode::convergence;
      CHECK(expected_kind);
      break;
    }
  }
  CHECK(errored);
}

TEST_CASE("warning fires when the current approaches I_*") {
  const ResonatorNetwork net = duffing_network();
  // Find a power that converges but drives the wire past 0.5 I_*.
  kineticon::Diagnostics diag;
  bool saw_warning = false;
  for (double p = 1e-14; p <= 1e-8; p *= 3.0) {
    try {
      diag.warnings.clear();
      (void)kineticon::duffing_shift(net, p, &diag);
      if (!diag.warnings.empty()) {
        saw_warning = true;
        break;
      }
    } catch (const Error&) {
      break;
    }
  }
  CHECK(saw_warning);
}

TEST_CASE("readout criterion is the literal strict inequality") {
  const double two_pi = 2.0 * std::numbers::pi;
  CHECK(kineticon::readout_ok(1e6, 1.0, 1e6));        // 1 MHz > 0.159 MHz
  CHECK(!kineticon::readout_ok(0.0, 1.0, 1e6));       // no shift
  CHECK(!kineticon::readout_ok(0.0, 0.0, 0.0));       // 0 > 0 is false
  CHECK(kineticon::readout_ok(1e-9, 0.0, 1e9));       // any shift beats n = 0
  const double boundary = 3.0 * 2e6 / two_pi;
  CHECK(!kineticon::readout_ok(boundary, 3.0, 2e6));  // equality is not enough
  CHECK(kineticon::readout_ok(std::nextafter(boundary, 1e308), 3.0, 2e6));
  CHECK_THROWS_AS(kineticon::readout_ok(-1.0, 1.0, 1e6), Error);
}
