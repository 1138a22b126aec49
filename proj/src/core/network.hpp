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

#ifndef KINETICON_CORE_NETWORK_HPP
#define KINETICON_CORE_NETWORK_HPP

#include <complex>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "error.hpp"

namespace kineticon {

using Complex = std::complex<double>;

struct TransmissionLine {
  double z0_ohm;
  double v_ph_m_s;
  double length_m;
  double loss_np_m = 0.0;  // attenuation in nepers per meter
};

struct SeriesImpedance {
  std::function<Complex(double)> z;  // ohms as a function of frequency
};

struct ShuntAdmittance {
  std::function<Complex(double)> y;  // siemens as a function of frequency
};

using NetworkElement = std::variant<TransmissionLine, SeriesImpedance, ShuntAdmittance>;

NetworkElement make_line(double z0_ohm, double v_ph_m_s, double length_m, double loss_np_m = 0.0);
NetworkElement make_series_inductor(double l_h);
NetworkElement make_series_capacitor(double c_f);
NetworkElement make_series_resistor(double r_ohm);
NetworkElement make_shunt_inductor(double l_h);
NetworkElement make_shunt_capacitor(double c_f);
NetworkElement make_shunt_resistor(double r_ohm);

// 2x2 transfer matrix [V1; I1] = M [V2; I2].
struct Abcd {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};
  Complex c{0.0, 0.0};
  Complex d{1.0, 0.0};

  Abcd operator*(const Abcd& rhs) const;
  Complex det() const { return a * d - b * c; }
  Abcd inverse() const;
};

Abcd abcd(const NetworkElement& element, double f_hz);
Abcd cascade(std::span<const NetworkElement> elements, double f_hz);

Complex s21(const Abcd& m, double zref_ohm);
Complex s11(const Abcd& m, double zref_ohm);

struct SweepPoint {
  double f_hz;
  Complex s21;
};

struct ResonanceResult {
  double f0_hz = 0.0;
  double q_loaded = 0.0;
  double bandwidth_hz = 0.0;  // f0 / Q
  double s21_min = 0.0;       // |S21| at the extremum
  bool is_dip = false;
};

// Locates the single resonance in a sweep: extremum of |S21| against the
// median baseline, parabolic refinement of the extremum, bandwidth from the
// half-power crossings. Zero or several features raise ambiguous_resonance.
ResonanceResult find_resonance(std::span<const SweepPoint> points);

struct NanowireParams {
  double l0k_h;
  double istar_a;
};

// Fabry-Perot readout resonator: ordered passive elements with the nonlinear
// nanowire inductor inserted at nanowire_index (a position in [0, size]).
// There is exactly one nonlinear element by construction.
struct ResonatorNetwork {
  std::vector<NetworkElement> elements;
  std::size_t nanowire_index = 0;
  NanowireParams nanowire{0.0, 0.0};
  double zref_ohm = 50.0;
};

struct HalfwaveDesign {
  double z0_ohm = 50.0;
  double eps_eff = 6.45;            // silicon-ish effective permittivity
  double f0_design_hz = 100e9;      // unloaded half-wave frequency
  double coupling_c_f = 1e-15;      // series coupling capacitors
  double zref_ohm = 50.0;
  double loss_np_m = 0.0;
  NanowireParams nanowire{0.0, 0.0};
};

// coupler, half-line, nanowire, half-line, coupler; the nanowire sits at the
// current antinode of the fundamental lambda/2 mode.
ResonatorNetwork make_halfwave_resonator(const HalfwaveDesign& design);

ResonatorNetwork reversed_network(const ResonatorNetwork& net);

// Transfer matrix / S21 of the full chain with the nanowire held at lk_h.
Abcd network_abcd(const ResonatorNetwork& net, double f_hz, double lk_h);
Complex network_s21(const ResonatorNetwork& net, double f_hz, double lk_h);

// Small-signal sweep (nanowire at L0k), deterministic grid order.
std::vector<SweepPoint> sweep_s21(const ResonatorNetwork& net, double f_start_hz,
                                  double f_stop_hz, std::size_t n_points);

// Driven two-port solution: source sqrt(4 Zref P) rms behind Zref at port 1,
// Zref load at port 2. Phasors are rms.
struct PortSolution {
  Complex v1, i1;         // at port 1 (after the source impedance)
  Complex v2, i2;         // at port 2 (into the load)
  Complex i_nanowire;     // through-current of the nanowire element
  double stored_energy_j; // time-averaged energy in the resonator elements
};

PortSolution solve_ports(const ResonatorNetwork& net, double f_hz, double lk_h,
                         double drive_power_w);

struct DuffingResult {
  double f0_small_hz = 0.0;    // small-signal resonance
  double f0_shifted_hz = 0.0;  // converged operating point
  double delta_f_hz = 0.0;     // f0_shifted - f0_small (negative for softening)
  double n_photons = 0.0;      // stored energy / (h f0_shifted)
  double i_rms_a = 0.0;        // nanowire current at the operating point
  double l_k_h = 0.0;          // converged kinetic inductance
  int iterations = 0;
  bool converged = false;
};

// Self-consistent power-dependent resonance. The drive tracks the resonance
// of the previous iterate; the nanowire inductance is updated with the
// rotating-wave (secular) Kerr average of the quartic potential,
//   L_k = L0k (1 + 3 I_rms^2 / I_*^2),
// damped by 0.5 per step, converged when successive resonances agree to
// 1e-12 relative. Beyond the critical drive the iteration either fails to
// converge, finds a second branch (BifurcationError carries both), loses
// fixed-point stability, or exits the validity range of the inductance
// expansion; all four surface as errors rather than silent values.
DuffingResult duffing_shift(const ResonatorNetwork& net, double drive_power_w,
                            Diagnostics* diag = nullptr);

// Literal readout criterion delta_f > n B / (2 pi), strict inequality.
bool readout_ok(double delta_f_hz, double n_photons, double bandwidth_hz);

}  // namespace kineticon

#endif  // KINETICON_CORE_NETWORK_HPP
