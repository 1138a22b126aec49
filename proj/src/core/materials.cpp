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

#include "materials.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "constants.hpp"

namespace kineticon {

namespace c = constants;

double Material::gap_frequency_hz() const { return 2.0 * delta_j / c::planck_j_s; }

Material Material::from_customary_units(std::string name, double tc_k, double delta_mev,
                                        double n0_per_ev_um3,
                                        std::optional<double> rho_n_uohm_cm, double xi) {
  Material m;
  m.name = std::move(name);
  m.tc_k = tc_k;
  m.delta_j = delta_mev * 1e-3 * c::joule_per_ev;
  // 1 eV^-1 um^-3 = (1/e) J^-1 * 1e18 m^-3
  m.n0_per_j_m3 = n0_per_ev_um3 * c::ev_per_joule * 1e18;
  if (rho_n_uohm_cm) m.rho_n_ohm_m = *rho_n_uohm_cm * 1e-8;  // uOhm cm -> Ohm m
  m.xi = xi;
  m.validate();
  return m;
}

void Material::validate() const {
  if (name.empty()) raise(ErrorCode::invalid_argument, "material needs a name");
  if (!(tc_k > 0.0) || !std::isfinite(tc_k))
    raise(ErrorCode::invalid_argument, "material '" + name + "': Tc must be positive");
  if (!(delta_j > 0.0) || !std::isfinite(delta_j))
    raise(ErrorCode::invalid_argument, "material '" + name + "': Delta must be positive");
  if (!(n0_per_j_m3 > 0.0) || !std::isfinite(n0_per_j_m3))
    raise(ErrorCode::invalid_argument, "material '" + name + "': N(0) must be positive");
  if (!(xi > 0.0 && xi <= 1.0))
    raise(ErrorCode::invalid_argument, "material '" + name + "': xi must be in (0, 1]");
  if (rho_n_ohm_m && !(*rho_n_ohm_m > 0.0))
    raise(ErrorCode::invalid_argument, "material '" + name + "': rho_n must be positive");
}

double Material::rho_n_or_throw() const {
  if (!rho_n_ohm_m)
    raise(ErrorCode::incomplete_material,
          "material '" + name + "' has no normal-state resistivity rho_n; "
          "set it in the config to use current-scale operations");
  return *rho_n_ohm_m;
}

NanowireGeometry::NanowireGeometry(double w, double l, double t)
    : width_m(w), length_m(l), thickness_m(t) {
  if (!(w > 0.0 && l > 0.0 && t > 0.0) || !std::isfinite(w) || !std::isfinite(l) ||
      !std::isfinite(t))
    raise(ErrorCode::invalid_argument, "nanowire dimensions must be positive and finite");
}

double istar(const Material& material, const NanowireGeometry& geometry) {
  const double rho = material.rho_n_or_throw();
  const double jstar = std::sqrt(std::numbers::pi * material.n0_per_j_m3 *
                                 material.delta_j * material.delta_j * material.delta_j /
                                 (c::hbar_j_s * rho));
  return jstar * geometry.width_m * geometry.thickness_m;
}

double sheet_inductance(const Material& material, double thickness_m) {
  if (!(thickness_m > 0.0)) raise(ErrorCode::invalid_argument, "thickness must be positive");
  const double rho = material.rho_n_or_throw();
  const double r_s = rho / thickness_m;
  return c::hbar_j_s * r_s / (std::numbers::pi * material.delta_j);
}

NanowireLumped nanowire_lumped(const Material& material, const NanowireGeometry& geometry) {
  const double squares = geometry.length_m / geometry.width_m;
  return NanowireLumped{
      sheet_inductance(material, geometry.thickness_m) * squares,
      istar(material, geometry),
  };
}

double alpha_volume(const Material& material, double f_r_hz, double volume_m3) {
  if (!(f_r_hz > 0.0) || !(volume_m3 > 0.0))
    raise(ErrorCode::invalid_argument, "alpha_volume needs positive frequency and volume");
  return 3.0 * c::planck_j_s * f_r_hz /
         (2.0 * material.n0_per_j_m3 * material.delta_j * material.delta_j * volume_m3);
}

double qp_thermal_factor(const Material& material, double temperature_k, bool single_delta) {
  if (!(temperature_k > 0.0)) raise(ErrorCode::invalid_argument, "temperature must be positive");
  const double gaps = single_delta ? 1.0 : 2.0;
  return std::exp(-gaps * material.delta_j / (c::boltzmann_j_per_k * temperature_k));
}

double qp_per_phonon(const Material& material, double nu_hz, Diagnostics* diag) {
  if (!(nu_hz > 0.0)) raise(ErrorCode::invalid_argument, "phonon frequency must be positive");
  const double h_nu = c::planck_j_s * nu_hz;
  if (h_nu < 2.0 * material.delta_j)
    warn_or_collect(diag, ErrorCode::validity,
                    "h*nu below 2*Delta: phonon cannot break a Cooper pair");
  return material.xi * h_nu / material.delta_j;
}

double recombination_scaling(double tc_ref_k, double tc_k) {
  if (!(tc_ref_k > 0.0 && tc_k > 0.0))
    raise(ErrorCode::invalid_argument, "critical temperatures must be positive");
  const double r = tc_k / tc_ref_k;
  return 1.0 / (r * r * r);
}

MaterialRegistry::MaterialRegistry() {
  // Paper-cited thin-film values: TiN N(0) = 8.7e9 eV^-1 um^-3, Delta = 0.5 meV;
  // NbN N(0) = 2e10 eV^-1 um^-3, Delta = 1.1 meV. Their Tc entries follow the
  // BCS ratio Delta = 1.764 kB Tc since no Tc is quoted for the films.
  // NbTiN: Tc = 15 K with Delta set by the ~1.4 THz gap frequency (2.9 meV,
  // a strong-coupling gap ratio); N(0) = 3.9e10 eV^-1 um^-3 is a
  // literature-typical default. Al: 90 GHz gap frequency -> Delta = 0.186 meV,
  // Tc = 1.2 K, N(0) = 1.72e10 eV^-1 um^-3 (literature-typical default).
  //
  // rho_n is deliberately unset on every built-in: it is sample dependent and
  // must come from the user. Typical literature scales, for orientation only:
  // TiN ~ 100 uOhm cm, NbN ~ 300 uOhm cm, NbTiN ~ 100 uOhm cm, Al ~ 1 uOhm cm.
  const double bcs = 1.764 * constants::boltzmann_j_per_k;
  const double tin_delta_j = 0.5e-3 * constants::joule_per_ev;
  const double nbn_delta_j = 1.1e-3 * constants::joule_per_ev;
  add(Material::from_customary_units("TiN", tin_delta_j / bcs, 0.5, 8.7e9, std::nullopt));
  add(Material::from_customary_units("NbN", nbn_delta_j / bcs, 1.1, 2e10, std::nullopt));
  add(Material::from_customary_units("NbTiN", 15.0, 2.9, 3.9e10, std::nullopt));
  add(Material::from_customary_units("Al", 1.2, 0.186, 1.72e10, std::nullopt));
}

void MaterialRegistry::add(Material material) {
  material.validate();
  if (contains(material.name))
    raise(ErrorCode::invalid_argument,
          "material '" + material.name + "' is already registered");
  records_.push_back(std::move(material));
}

const Material& MaterialRegistry::get(std::string_view name) const {
  for (const Material& m : records_)
    if (m.name == name) return m;
  std::ostringstream msg;
  msg << "unknown material '" << name << "'; available:";
  for (const Material& m : records_) msg << ' ' << m.name;
  raise(ErrorCode::unknown_material, msg.str());
}

bool MaterialRegistry::contains(std::string_view name) const {
  for (const Material& m : records_)
    if (m.name == name) return true;
  return false;
}

std::vector<std::string> MaterialRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(records_.size());
  for (const Material& m : records_) out.push_back(m.name);
  return out;
}

}  // namespace kineticon
