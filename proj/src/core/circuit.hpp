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

#ifndef KINETICON_CORE_CIRCUIT_HPP
#define KINETICON_CORE_CIRCUIT_HPP

#include "error.hpp"

namespace kineticon {

// Lumped kinetic-inductance qubit: LC resonator whose inductor is a
// superconducting nanowire with L_k(Phi) = L0k (1 + Phi^2/Phi_*^2),
// Phi_* = I_* L0k.
struct KineticonCircuit {
  double l0k_h;    // zero-bias kinetic inductance
  double c_f;      // shunt capacitance
  double istar_a;  // characteristic current

  KineticonCircuit(double l0k, double c, double istar);
};

// Quantities derived from the circuit; all frequencies are plain Hz.
struct DerivedCircuit {
  double f_r_hz;       // 1 / (2 pi sqrt(L0k C))
  double z0_ohm;       // sqrt(L0k / C)
  double phi_star_wb;  // I_* L0k
  double phi_zpf_wb;   // sqrt(hbar Z0 / 2)
  double q_zpf_c;      // sqrt(hbar / (2 Z0))
  double i_zpf_a;      // sqrt(h f_r / (2 L0k))
  double e_k_j;        // Phi_*^2 / (2 L0k)
  double lambda;       // -phi_zpf^2 / Phi_*^2, always negative
};

// L_k(Phi). Warns above |Phi/Phi_*| = 0.5, errors at or beyond 1.
double nonlinear_inductance(const KineticonCircuit& circuit, double phi_wb,
                            Diagnostics* diag = nullptr);

struct CircuitEnergies {
  double u_c_j;  // (1/2) C Phidot^2
  double u_l_j;  // E_k (Phi^2/Phi_*^2 - Phi^4/Phi_*^4)
};

CircuitEnergies energies(const KineticonCircuit& circuit, double phi_wb, double phidot_v);

DerivedCircuit derive(const KineticonCircuit& circuit);

// Relative anharmonicity alpha = 3 I_zpf^2 / I_*^2; identically 3|lambda|.
double alpha_perturbative(const KineticonCircuit& circuit, Diagnostics* diag = nullptr);

// Design helper: C = 1 / ((2 pi f_r)^2 L0k).
double capacitor_for_frequency(double l0k_h, double f_r_hz);

}  // namespace kineticon

#endif  // KINETICON_CORE_CIRCUIT_HPP
