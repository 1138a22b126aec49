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

#include "circuit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "constants.hpp"

namespace kineticon {

namespace {

void require_finite_positive(double v, const char* what) {
  if (!std::isfinite(v)) raise(ErrorCode::domain, std::string(what) + " must be finite");
  if (v <= 0.0) raise(ErrorCode::invalid_argument, std::string(what) + " must be positive");
}

}  // namespace

KineticonCircuit::KineticonCircuit(double l0k, double c, double istar)
    : l0k_h(l0k), c_f(c), istar_a(istar) {
  require_finite_positive(l0k, "L0k");
  require_finite_positive(c, "C");
  require_finite_positive(istar, "I_*");
}

double nonlinear_inductance(const KineticonCircuit& circuit, double phi_wb, Diagnostics* diag) {
  if (!std::isfinite(phi_wb)) raise(ErrorCode::domain, "Phi must be finite");
  const double phi_star = circuit.istar_a * circuit.l0k_h;
  const double ratio = std::abs(phi_wb / phi_star);
  if (ratio >= 1.0)
    raise(ErrorCode::validity, "|Phi/Phi_*| >= 1 is outside the weak-anharmonic expansion");
  if (ratio >= 0.5)
    warn_or_collect(diag, ErrorCode::validity,
                    "|Phi/Phi_*| = " + std::to_string(ratio) +
                        " exceeds 0.5; weak-anharmonic form is marginal");
  return circuit.l0k_h * (1.0 + (phi_wb / phi_star) * (phi_wb / phi_star));
}

CircuitEnergies energies(const KineticonCircuit& circuit, double phi_wb, double phidot_v) {
  if (!std::isfinite(phi_wb) || !std::isfinite(phidot_v))
    raise(ErrorCode::domain, "energies inputs must be finite");
  const double phi_star = circuit.istar_a * circuit.l0k_h;
  const double e_k = phi_star * phi_star / (2.0 * circuit.l0k_h);
  const double r2 = (phi_wb / phi_star) * (phi_wb / phi_star);
  return CircuitEnergies{
      0.5 * circuit.c_f * phidot_v * phidot_v,
      e_k * (r2 - r2 * r2),
  };
}

DerivedCircuit derive(const KineticonCircuit& circuit) {
  DerivedCircuit d{};
  const double omega = 1.0 / std::sqrt(circuit.l0k_h * circuit.c_f);
  d.f_r_hz = omega / (2.0 * std::numbers::pi);
  d.z0_ohm = std::sqrt(circuit.l0k_h / circuit.c_f);
  d.phi_star_wb = circuit.istar_a * circuit.l0k_h;
  d.phi_zpf_wb = std::sqrt(constants::hbar_j_s * d.z0_ohm / 2.0);
  d.q_zpf_c = std::sqrt(constants::hbar_j_s / (2.0 * d.z0_ohm));
  d.i_zpf_a = std::sqrt(constants::planck_j_s * d.f_r_hz / (2.0 * circuit.l0k_h));
  d.e_k_j = d.phi_star_wb * d.phi_star_wb / (2.0 * circuit.l0k_h);
  d.lambda = -(d.phi_zpf_wb / d.phi_star_wb) * (d.phi_zpf_wb / d.phi_star_wb);
  return d;
}

double alpha_perturbative(const KineticonCircuit& circuit, Diagnostics* diag) {
  const DerivedCircuit d = derive(circuit);
  if (std::abs(d.lambda) >= 1e-2)
    warn_or_collect(diag, ErrorCode::validity,
                    "|lambda| = " + std::to_string(std::abs(d.lambda)) +
                        " exceeds 1e-2; perturbative anharmonicity is unreliable");
  return 3.0 * (d.i_zpf_a / circuit.istar_a) * (d.i_zpf_a / circuit.istar_a);
}

double capacitor_for_frequency(double l0k_h, double f_r_hz) {
  require_finite_positive(l0k_h, "L0k");
  require_finite_positive(f_r_hz, "f_r");
  const double omega = 2.0 * std::numbers::pi * f_r_hz;
  return 1.0 / (omega * omega * l0k_h);
}

}  // namespace kineticon
