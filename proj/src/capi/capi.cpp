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

#include "kineticon.h"

#include <cstdlib>
#include <cstring>
#include <deque>
#include <new>
#include <string>

#include "../core/cavity.hpp"
#include "../core/circuit.hpp"
#include "../core/materials.hpp"
#include "../core/network.hpp"
#include "../core/quantum.hpp"
#include "../core/sweep.hpp"

namespace {

thread_local std::string g_last_error;

kin_status status_of(kineticon::ErrorCode code) {
  using kineticon::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return KIN_EINVAL;
    case ErrorCode::domain: return KIN_EDOMAIN;
    case ErrorCode::validity: return KIN_EVALIDITY;
    case ErrorCode::convergence: return KIN_ECONVERGENCE;
    case ErrorCode::bifurcation: return KIN_EBIFURCATION;
    case ErrorCode::ambiguous_resonance: return KIN_EAMBIGUOUS;
    case ErrorCode::incomplete_material: return KIN_EMATERIAL;
    case ErrorCode::unknown_material: return KIN_ENOTFOUND;
    case ErrorCode::mode_index: return KIN_EMODEINDEX;
    case ErrorCode::unreachable_loading: return KIN_ELOADING;
    case ErrorCode::parse: return KIN_EPARSE;
    case ErrorCode::io: return KIN_EIO;
  }
  return KIN_EINVAL;
}

template <typename Fn>
kin_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return KIN_OK;
  } catch (const kineticon::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return KIN_EIO;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KIN_EINVAL;
  }
}

kin_status require(bool ok, const char* message) {
  if (ok) return KIN_OK;
  g_last_error = message;
  return KIN_EINVAL;
}

}  // namespace

struct kin_circuit {
  kineticon::KineticonCircuit circuit;
};
struct kin_spectrum {
  kineticon::FockSpectrum spectrum;
};
// Handles borrowed from the registry index its record; records are only ever
// appended, so an index stays valid for the registry's lifetime.
struct kin_material {
  const kin_registry* owner;
  size_t index;
};
struct kin_registry {
  kineticon::MaterialRegistry registry;
  std::deque<kin_material> handles;  // stable addresses for borrowed pointers
};
struct kin_network {
  kineticon::ResonatorNetwork network;
};
struct kin_dressed {
  kineticon::DressedSpectrum dressed;
};

namespace {

const kineticon::Material* record_of(const kin_material* m) {
  if (!m || !m->owner || m->index >= m->owner->registry.records().size()) return nullptr;
  return &m->owner->registry.records()[m->index];
}

kineticon::CoupledSystem to_system(const kin_coupled_params& p) {
  kineticon::CoupledSystem sys;
  sys.f_cavity_hz = p.f_cavity_hz;
  sys.f_qubit_hz = p.f_qubit_hz;
  sys.lambda_q = p.lambda_q;
  sys.g_hz = p.g_hz;
  sys.kappa1_hz = p.kappa1_hz;
  sys.kappa2_hz = p.kappa2_hz;
  sys.gamma_hz = p.gamma_hz;
  if (p.dim_cavity > 0) sys.dim_cavity = p.dim_cavity;
  if (p.dim_qubit > 0) sys.dim_qubit = p.dim_qubit;
  return sys;
}

kin_status sweep_common(const char* config_json, const char* format, int strict,
                        kineticon::SweepResult& result, kineticon::OutputFormat& out_format,
                        std::string& out_path, kin_sweep_report* report) {
  const kineticon::SweepConfig config = kineticon::parse_config(config_json);
  out_format = config.output.format;
  out_path = config.output.path;
  if (format) {
    const std::string f = format;
    if (f == "csv")
      out_format = kineticon::OutputFormat::csv;
    else if (f == "contour")
      out_format = kineticon::OutputFormat::contour;
    else
      kineticon::raise(kineticon::ErrorCode::parse, "format must be 'csv' or 'contour'");
    if (out_format == kineticon::OutputFormat::contour && config.axes.size() != 2)
      kineticon::raise(kineticon::ErrorCode::parse, "contour output needs exactly 2 axes");
  }
  result = kineticon::run_sweep(config, kineticon::RunOptions{strict != 0});
  if (report) {
    report->points_total = result.rows.size();
    report->points_failed = result.failed_points;
    report->config_fnv1a = config.config_hash;
  }
  return KIN_OK;
}

}  // namespace

extern "C" {

const char* kin_strerror(kin_status status) {
  switch (status) {
    case KIN_OK: return "ok";
    case KIN_EINVAL: return "invalid argument";
    case KIN_EDOMAIN: return "non-finite input";
    case KIN_EVALIDITY: return "model validity bound exceeded";
    case KIN_ECONVERGENCE: return "iteration did not converge";
    case KIN_EBIFURCATION: return "bifurcation detected";
    case KIN_EAMBIGUOUS: return "ambiguous resonance";
    case KIN_EMATERIAL: return "incomplete material record";
    case KIN_ENOTFOUND: return "unknown material";
    case KIN_EMODEINDEX: return "invalid mode indices";
    case KIN_ELOADING: return "unreachable loading target";
    case KIN_EPARSE: return "config validation failed";
    case KIN_EIO: return "I/O failed";
    case KIN_EPOINTS: return "sweep finished with failed points";
  }
  return "unknown status";
}

const char* kin_last_error(void) { return g_last_error.c_str(); }

/* ---- circuit ---- */

kin_status kin_circuit_create(double l0k_h, double c_f, double istar_a, kin_circuit** out) {
  if (kin_status s = require(out != nullptr, "out must not be null")) return s;
  return guarded([&] { *out = new kin_circuit{kineticon::KineticonCircuit(l0k_h, c_f, istar_a)}; });
}

kin_status kin_circuit_create_for_frequency(double l0k_h, double f_r_hz, double istar_a,
                                            kin_circuit** out) {
  if (kin_status s = require(out != nullptr, "out must not be null")) return s;
  return guarded([&] {
    const double c = kineticon::capacitor_for_frequency(l0k_h, f_r_hz);
    *out = new kin_circuit{kineticon::KineticonCircuit(l0k_h, c, istar_a)};
  });
}

void kin_circuit_free(kin_circuit* circuit) { delete circuit; }

kin_status kin_circuit_derived(const kin_circuit* circuit, kin_derived* out) {
  if (kin_status s = require(circuit && out, "null argument")) return s;
  return guarded([&] {
    const kineticon::DerivedCircuit d = kineticon::derive(circuit->circuit);
    *out = kin_derived{d.f_r_hz, d.z0_ohm, d.phi_star_wb, d.phi_zpf_wb,
                       d.q_zpf_c, d.i_zpf_a, d.e_k_j,      d.lambda};
  });
}

kin_status kin_circuit_inductance(const kin_circuit* circuit, double phi_wb, int strict,
                                  double* out_h) {
  if (kin_status s = require(circuit && out_h, "null argument")) return s;
  return guarded([&] {
    kineticon::Diagnostics diag{strict != 0, {}};
    *out_h = kineticon::nonlinear_inductance(circuit->circuit, phi_wb, &diag);
  });
}

kin_status kin_circuit_energies(const kin_circuit* circuit, double phi_wb, double phidot_v,
                                double* u_c_j, double* u_l_j) {
  if (kin_status s = require(circuit && u_c_j && u_l_j, "null argument")) return s;
  return guarded([&] {
    const kineticon::CircuitEnergies e = kineticon::energies(circuit->circuit, phi_wb, phidot_v);
    *u_c_j = e.u_c_j;
    *u_l_j = e.u_l_j;
  });
}

kin_status kin_circuit_alpha(const kin_circuit* circuit, int strict, double* out) {
  if (kin_status s = require(circuit && out, "null argument")) return s;
  return guarded([&] {
    kineticon::Diagnostics diag{strict != 0, {}};
    *out = kineticon::alpha_perturbative(circuit->circuit, &diag);
  });
}

double kin_capacitance_for_frequency(double l0k_h, double f_r_hz) {
  try {
    return kineticon::capacitor_for_frequency(l0k_h, f_r_hz);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return 0.0;
  }
}

/* ---- spectrum ---- */

kin_status kin_spectrum_compute(double f_r_hz, double lambda, int dim, int strict,
                                kin_spectrum** out) {
  if (kin_status s = require(out != nullptr, "out must not be null")) return s;
  return guarded([&] {
    kineticon::Diagnostics diag{strict != 0, {}};
    *out = new kin_spectrum{kineticon::spectrum(f_r_hz, lambda, dim, &diag)};
  });
}

void kin_spectrum_free(kin_spectrum* spectrum) { delete spectrum; }

int kin_spectrum_dim(const kin_spectrum* s) { return s ? s->spectrum.dim : 0; }

double kin_spectrum_level(const kin_spectrum* s, int n) {
  if (!s || n < 0 || n >= s->spectrum.dim) return 0.0;
  return s->spectrum.levels[static_cast<std::size_t>(n)];
}

double kin_spectrum_f01(const kin_spectrum* s) { return s ? s->spectrum.f01 : 0.0; }
double kin_spectrum_f12(const kin_spectrum* s) { return s ? s->spectrum.f12 : 0.0; }
double kin_spectrum_alpha_rel(const kin_spectrum* s) { return s ? s->spectrum.alpha_rel : 0.0; }
double kin_spectrum_alpha_abs(const kin_spectrum* s) { return s ? s->spectrum.alpha_abs : 0.0; }

double kin_perturbative_level(double f_r_hz, double lambda, int n) {
  try {
    return kineticon::perturbative_level(f_r_hz, lambda, n);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return 0.0;
  }
}

/* ---- materials ---- */

kin_status kin_registry_create(kin_registry** out) {
  if (kin_status s = require(out != nullptr, "out must not be null")) return s;
  return guarded([&] { *out = new kin_registry{}; });
}

void kin_registry_free(kin_registry* registry) { delete registry; }

size_t kin_registry_count(const kin_registry* registry) {
  return registry ? registry->registry.records().size() : 0;
}

const char* kin_registry_name(const kin_registry* registry, size_t index) {
  if (!registry || index >= registry->registry.records().size()) return nullptr;
  return registry->registry.records()[index].name.c_str();
}

kin_status kin_registry_find(const kin_registry* registry, const char* name,
                             const kin_material** out) {
  if (kin_status s = require(registry && name && out, "null argument")) return s;
  return guarded([&] {
    (void)registry->registry.get(name);  // throws with the available names
    const auto& records = registry->registry.records();
    size_t index = 0;
    while (records[index].name != name) ++index;
    for (const kin_material& h : registry->handles)
      if (h.index == index) {
        *out = &h;
        return;
      }
    auto* mutable_registry = const_cast<kin_registry*>(registry);
    mutable_registry->handles.push_back(kin_material{registry, index});
    *out = &mutable_registry->handles.back();
  });
}

kin_status kin_registry_add(kin_registry* registry, const char* name, double tc_k,
                            double delta_mev, double n0_per_ev_um3, double rho_n_uohm_cm,
                            double xi) {
  if (kin_status s = require(registry && name, "null argument")) return s;
  return guarded([&] {
    std::optional<double> rho;
    if (rho_n_uohm_cm >= 0.0) rho = rho_n_uohm_cm;
    registry->registry.add(kineticon::Material::from_customary_units(
        name, tc_k, delta_mev, n0_per_ev_um3, rho, xi));
  });
}

double kin_material_tc_k(const kin_material* m) {
  const auto* r = record_of(m);
  return r ? r->tc_k : 0.0;
}
double kin_material_delta_j(const kin_material* m) {
  const auto* r = record_of(m);
  return r ? r->delta_j : 0.0;
}
double kin_material_n0_per_j_m3(const kin_material* m) {
  const auto* r = record_of(m);
  return r ? r->n0_per_j_m3 : 0.0;
}
double kin_material_xi(const kin_material* m) {
  const auto* r = record_of(m);
  return r ? r->xi : 0.0;
}
int kin_material_has_rho_n(const kin_material* m) {
  const auto* r = record_of(m);
  return r && r->rho_n_ohm_m ? 1 : 0;
}
double kin_material_rho_n_ohm_m(const kin_material* m) {
  const auto* r = record_of(m);
  return r && r->rho_n_ohm_m ? *r->rho_n_ohm_m : 0.0;
}
double kin_material_gap_frequency_hz(const kin_material* m) {
  const auto* r = record_of(m);
  return r ? r->gap_frequency_hz() : 0.0;
}

kin_status kin_material_istar(const kin_material* material, double w_m, double l_m, double t_m,
                              double* out_a) {
  const auto* r = record_of(material);
  if (kin_status s = require(r && out_a, "null argument")) return s;
  return guarded(
      [&] { *out_a = kineticon::istar(*r, kineticon::NanowireGeometry(w_m, l_m, t_m)); });
}

kin_status kin_material_sheet_inductance(const kin_material* material, double t_m,
                                         double* out_h_per_sq) {
  const auto* r = record_of(material);
  if (kin_status s = require(r && out_h_per_sq, "null argument")) return s;
  return guarded([&] { *out_h_per_sq = kineticon::sheet_inductance(*r, t_m); });
}

kin_status kin_material_nanowire_lumped(const kin_material* material, double w_m, double l_m,
                                        double t_m, double* l0k_h, double* istar_a) {
  const auto* r = record_of(material);
  if (kin_status s = require(r && l0k_h && istar_a, "null argument")) return s;
  return guarded([&] {
    const kineticon::NanowireLumped lumped =
        kineticon::nanowire_lumped(*r, kineticon::NanowireGeometry(w_m, l_m, t_m));
    *l0k_h = lumped.l0k_h;
    *istar_a = lumped.istar_a;
  });
}

kin_status kin_material_alpha_volume(const kin_material* material, double f_r_hz, double v_m3,
                                     double* out) {
  const auto* r = record_of(material);
  if (kin_status s = require(r && out, "null argument")) return s;
  return guarded([&] { *out = kineticon::alpha_volume(*r, f_r_hz, v_m3); });
}

kin_status kin_material_qp_thermal_factor(const kin_material* material, double t_k,
                                          int single_delta, double* out) {
  const auto* r = record_of(material);
  if (kin_status s = require(r && out, "null argument")) return s;
  return guarded([&] { *out = kineticon::qp_thermal_factor(*r, t_k, single_delta != 0); });
}

kin_status kin_material_qp_per_phonon(const kin_material* material, double nu_hz, double* out) {
  const auto* r = record_of(material);
  if (kin_status s = require(r && out, "null argument")) return s;
  return guarded([&] { *out = kineticon::qp_per_phonon(*r, nu_hz); });
}

double kin_recombination_scaling(double tc_ref_k, double tc_k) {
  try {
    return kineticon::recombination_scaling(tc_ref_k, tc_k);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return 0.0;
  }
}

/* ---- resonator ---- */

void kin_halfwave_design_init(kin_halfwave_design* design) {
  if (!design) return;
  const kineticon::HalfwaveDesign d;
  design->z0_ohm = d.z0_ohm;
  design->eps_eff = d.eps_eff;
  design->f0_design_hz = d.f0_design_hz;
  design->coupling_c_f = d.coupling_c_f;
  design->zref_ohm = d.zref_ohm;
  design->loss_np_m = d.loss_np_m;
  design->l0k_h = 0.0;
  design->istar_a = 0.0;
}

kin_status kin_network_create_halfwave(const kin_halfwave_design* design, kin_network** out) {
  if (kin_status s = require(design && out, "null argument")) return s;
  return guarded([&] {
    kineticon::HalfwaveDesign d;
    d.z0_ohm = design->z0_ohm;
    d.eps_eff = design->eps_eff;
    d.f0_design_hz = design->f0_design_hz;
    d.coupling_c_f = design->coupling_c_f;
    d.zref_ohm = design->zref_ohm;
    d.loss_np_m = design->loss_np_m;
    d.nanowire = kineticon::NanowireParams{design->l0k_h, design->istar_a};
    *out = new kin_network{kineticon::make_halfwave_resonator(d)};
  });
}

kin_status kin_network_create_from_json(const char* json_text, kin_network** out) {
  if (kin_status s = require(json_text && out, "null argument")) return s;
  return guarded([&] { *out = new kin_network{kineticon::network_from_json_text(json_text)}; });
}

void kin_network_free(kin_network* network) { delete network; }

kin_status kin_network_s21(const kin_network* network, double f_hz, double* re, double* im) {
  if (kin_status s = require(network && re && im, "null argument")) return s;
  return guarded([&] {
    const kineticon::Complex v =
        kineticon::network_s21(network->network, f_hz, network->network.nanowire.l0k_h);
    *re = v.real();
    *im = v.imag();
  });
}

kin_status kin_network_sweep(const kin_network* network, double f_start_hz, double f_stop_hz,
                             size_t n, double* f_hz, double* re, double* im) {
  if (kin_status s = require(network && f_hz && re && im, "null argument")) return s;
  return guarded([&] {
    const auto points = kineticon::sweep_s21(network->network, f_start_hz, f_stop_hz, n);
    for (size_t i = 0; i < points.size(); ++i) {
      f_hz[i] = points[i].f_hz;
      re[i] = points[i].s21.real();
      im[i] = points[i].s21.imag();
    }
  });
}

kin_status kin_find_resonance(const double* f_hz, const double* re, const double* im, size_t n,
                              kin_resonance* out) {
  if (kin_status s = require(f_hz && re && im && out, "null argument")) return s;
  return guarded([&] {
    std::vector<kineticon::SweepPoint> points(n);
    for (size_t i = 0; i < n; ++i)
      points[i] = kineticon::SweepPoint{f_hz[i], kineticon::Complex{re[i], im[i]}};
    const kineticon::ResonanceResult r = kineticon::find_resonance(points);
    *out = kin_resonance{r.f0_hz, r.q_loaded, r.bandwidth_hz, r.s21_min, r.is_dip ? 1 : 0};
  });
}

kin_status kin_network_duffing(const kin_network* network, double drive_power_w, int strict,
                               kin_duffing* out) {
  if (kin_status s = require(network && out, "null argument")) return s;
  *out = kin_duffing{};
  try {
    kineticon::Diagnostics diag{strict != 0, {}};
    const kineticon::DuffingResult r =
        kineticon::duffing_shift(network->network, drive_power_w, &diag);
    out->f0_small_hz = r.f0_small_hz;
    out->f0_shifted_hz = r.f0_shifted_hz;
    out->delta_f_hz = r.delta_f_hz;
    out->n_photons = r.n_photons;
    out->i_rms_a = r.i_rms_a;
    out->l_k_h = r.l_k_h;
    out->iterations = r.iterations;
    out->converged = r.converged ? 1 : 0;
    g_last_error.clear();
    return KIN_OK;
  } catch (const kineticon::BifurcationError& e) {
    g_last_error = e.what();
    out->branch_low_hz = e.f0_low_hz();
    out->branch_high_hz = e.f0_high_hz();
    return KIN_EBIFURCATION;
  } catch (const kineticon::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KIN_EINVAL;
  }
}

int kin_readout_ok(double delta_f_hz, double n_photons, double bandwidth_hz) {
  try {
    return kineticon::readout_ok(delta_f_hz, n_photons, bandwidth_hz) ? 1 : 0;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return -1;
  }
}

/* ---- cavity ---- */

kin_status kin_cavity_mode_frequency(double a_m, double b_m, double d_m, double eps_eff, int m,
                                     int n, int p, kin_mode_family family, double* out_hz) {
  if (kin_status s = require(out_hz != nullptr, "out must not be null")) return s;
  return guarded([&] {
    const kineticon::RectCavity cavity(a_m, b_m, d_m, eps_eff);
    *out_hz = kineticon::mode_frequency(
        cavity, m, n, p,
        family == KIN_TE ? kineticon::ModeFamily::te : kineticon::ModeFamily::tm);
  });
}

kin_status kin_cavity_loading_for_target(double a_m, double b_m, double d_m, int m, int n, int p,
                                         kin_mode_family family, double f_target_hz,
                                         double* out_eps_eff) {
  if (kin_status s = require(out_eps_eff != nullptr, "out must not be null")) return s;
  return guarded([&] {
    const kineticon::RectCavity cavity(a_m, b_m, d_m, 1.0);
    *out_eps_eff = kineticon::loading_for_target(
        cavity, m, n, p, family == KIN_TE ? kineticon::ModeFamily::te : kineticon::ModeFamily::tm,
        f_target_hz);
  });
}

kin_status kin_dressed_compute(const kin_coupled_params* params, int strict, kin_dressed** out) {
  if (kin_status s = require(params && out, "null argument")) return s;
  return guarded([&] {
    kineticon::Diagnostics diag{strict != 0, {}};
    *out = new kin_dressed{kineticon::dressed_spectrum(to_system(*params), &diag)};
  });
}

void kin_dressed_free(kin_dressed* dressed) { delete dressed; }

size_t kin_dressed_count(const kin_dressed* d) { return d ? d->dressed.levels.size() : 0; }

double kin_dressed_level(const kin_dressed* d, size_t index) {
  if (!d || index >= d->dressed.levels.size()) return 0.0;
  return d->dressed.levels[index];
}

double kin_dressed_f_cavity(const kin_dressed* d) { return d ? d->dressed.f_cavity_dressed : 0.0; }
double kin_dressed_f_qubit(const kin_dressed* d) { return d ? d->dressed.f_qubit_dressed : 0.0; }
double kin_dressed_chi(const kin_dressed* d) { return d ? d->dressed.chi_hz : 0.0; }

kin_status kin_coupled_s21(const kin_coupled_params* params, const double* f_hz, size_t n,
                           double* re, double* im) {
  if (kin_status s = require(params && f_hz && re && im, "null argument")) return s;
  return guarded([&] {
    const kineticon::CoupledSystem sys = to_system(*params);
    for (size_t i = 0; i < n; ++i) {
      const std::complex<double> v = kineticon::s21_coupled_at(sys, f_hz[i]);
      re[i] = v.real();
      im[i] = v.imag();
    }
  });
}

/* ---- sweeps ---- */

kin_status kin_sweep_validate(const char* config_json) {
  if (kin_status s = require(config_json != nullptr, "config must not be null")) return s;
  return guarded([&] { (void)kineticon::parse_config(config_json); });
}

kin_status kin_sweep_run(const char* config_json, const char* out_path, const char* format,
                         int strict, kin_sweep_report* report) {
  if (kin_status s = require(config_json != nullptr, "config must not be null")) return s;
  kineticon::SweepResult result;
  kineticon::OutputFormat fmt{};
  std::string path;
  const kin_status s = guarded([&] {
    sweep_common(config_json, format, strict, result, fmt, path, report);
    kineticon::emit_to_file(result, out_path ? out_path : path.c_str(), fmt);
  });
  if (s != KIN_OK) return s;
  if (result.failed_points > 0) {
    g_last_error = std::to_string(result.failed_points) + " of " +
                   std::to_string(result.rows.size()) + " sweep points failed";
    return KIN_EPOINTS;
  }
  return KIN_OK;
}

kin_status kin_sweep_run_to_string(const char* config_json, const char* format, int strict,
                                   char** out_text, kin_sweep_report* report) {
  if (kin_status s = require(config_json && out_text, "null argument")) return s;
  kineticon::SweepResult result;
  kineticon::OutputFormat fmt{};
  std::string path;
  std::string text;
  const kin_status s = guarded([&] {
    sweep_common(config_json, format, strict, result, fmt, path, report);
    text = kineticon::emit_to_string(result, fmt);
  });
  if (s != KIN_OK) return s;
  char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
  if (!buffer) {
    g_last_error = "out of memory";
    return KIN_EIO;
  }
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  *out_text = buffer;
  if (result.failed_points > 0) {
    g_last_error = std::to_string(result.failed_points) + " of " +
                   std::to_string(result.rows.size()) + " sweep points failed";
    return KIN_EPOINTS;
  }
  return KIN_OK;
}

void kin_string_free(char* text) { std::free(text); }

} /* extern "C" */
