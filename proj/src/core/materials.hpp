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

#ifndef KINETICON_CORE_MATERIALS_HPP
#define KINETICON_CORE_MATERIALS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace kineticon {

// Superconductor parameter record. Internal storage is strict SI; the
// customary units (meV, eV^-1 um^-3, uOhm cm) are converted once at
// construction via from_customary_units.
struct Material {
  std::string name;
  double tc_k = 0.0;                      // critical temperature
  double delta_j = 0.0;                   // gap parameter
  double n0_per_j_m3 = 0.0;               // single-spin DOS at the Fermi level
  std::optional<double> rho_n_ohm_m;      // normal-state resistivity (user supplied)
  double xi = 0.5;                        // phonon pair-breaking efficiency

  // Photon frequency 2*Delta/h above which Cooper pairs break.
  double gap_frequency_hz() const;

  static Material from_customary_units(std::string name, double tc_k, double delta_mev,
                                       double n0_per_ev_um3,
                                       std::optional<double> rho_n_uohm_cm,
                                       double xi = 0.5);

  void validate() const;
  // Throws incomplete_material unless rho_n is set.
  double rho_n_or_throw() const;
};

struct NanowireGeometry {
  double width_m;
  double length_m;
  double thickness_m;

  NanowireGeometry(double w, double l, double t);
  double volume_m3() const { return width_m * length_m * thickness_m; }
};

// I_* = sqrt(pi N(0) Delta^3 / (hbar rho_n)) * w * t
double istar(const Material& material, const NanowireGeometry& geometry);

// L_s = hbar R_s / (pi Delta) with R_s = rho_n / t; henries per square.
double sheet_inductance(const Material& material, double thickness_m);

struct NanowireLumped {
  double l0k_h;
  double istar_a;
};

// (L0k, I_*) of the nanowire: L0k = L_s * (l / w) squares.
NanowireLumped nanowire_lumped(const Material& material, const NanowireGeometry& geometry);

// alpha ~= 3 h f_r / (2 N0 Delta^2 V); the denominator is the
// superconducting condensation energy of the wire volume.
double alpha_volume(const Material& material, double f_r_hz, double volume_m3);

// Thermal quasiparticle factor exp(-2 Delta / (kB T)); set single_delta for
// the conventional exp(-Delta / (kB T)) form.
double qp_thermal_factor(const Material& material, double temperature_k,
                         bool single_delta = false);

// Mean quasiparticles per absorbed phonon, xi h nu / Delta. Warns when the
// phonon cannot break a pair (h nu < 2 Delta).
double qp_per_phonon(const Material& material, double nu_hz, Diagnostics* diag = nullptr);

// Relative quasiparticle recombination rate (Tc / Tc_ref)^-3.
double recombination_scaling(double tc_ref_k, double tc_k);

// Immutable-after-load registry of material records. Ships with TiN, NbN,
// NbTiN and Al; additional records come from the sweep config.
class MaterialRegistry {
 public:
  MaterialRegistry();

  void add(Material material);  // duplicate name -> invalid_argument

  const Material& get(std::string_view name) const;  // unknown -> unknown_material
  bool contains(std::string_view name) const;
  std::vector<std::string> names() const;
  const std::vector<Material>& records() const { return records_; }

 private:
  std::vector<Material> records_;
};

}  // namespace kineticon

#endif  // KINETICON_CORE_MATERIALS_HPP
