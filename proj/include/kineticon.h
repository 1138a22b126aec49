/* Copyright 2026 The Kineticon Toolkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the kineticon shared library: millimeter-wave kinetic-inductance
 * qubit design and simulation. Opaque handles own their resources and are
 * released with the matching *_free call; every fallible function returns a
 * kin_status, with a human-readable detail available from kin_last_error()
 * (thread local, valid until the next API call on the same thread).
 *
 * Units are strict SI unless a suffix says otherwise.
 */

#ifndef KINETICON_H
#define KINETICON_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kin_status {
  KIN_OK = 0,
  KIN_EINVAL = 1,        /* precondition violated */
  KIN_EDOMAIN = 2,       /* non-finite input */
  KIN_EVALIDITY = 3,     /* model validity bound exceeded */
  KIN_ECONVERGENCE = 4,  /* truncation / fixed point did not converge */
  KIN_EBIFURCATION = 5,  /* Duffing fold; both branches reported */
  KIN_EAMBIGUOUS = 6,    /* zero or several resonances in range */
  KIN_EMATERIAL = 7,     /* material record incomplete (rho_n missing) */
  KIN_ENOTFOUND = 8,     /* unknown material name */
  KIN_EMODEINDEX = 9,    /* invalid cavity mode indices */
  KIN_ELOADING = 10,     /* loading target not reachable */
  KIN_EPARSE = 11,       /* config validation failed */
  KIN_EIO = 12,          /* file I/O failed */
  KIN_EPOINTS = 13       /* sweep finished but some points failed */
} kin_status;

const char* kin_strerror(kin_status status);
const char* kin_last_error(void);

/* ------------------------------------------------------------------ */
/* Lumped qubit circuit                                                */

typedef struct kin_circuit kin_circuit;

typedef struct kin_derived {
  double f_r_hz;
  double z0_ohm;
  double phi_star_wb;
  double phi_zpf_wb;
  double q_zpf_c;
  double i_zpf_a;
  double e_k_j;
  double lambda; /* negative quartic coefficient */
} kin_derived;

kin_status kin_circuit_create(double l0k_h, double c_f, double istar_a, kin_circuit** out);
/* Convenience: picks C = 1/((2 pi f_r)^2 L0k). */
kin_status kin_circuit_create_for_frequency(double l0k_h, double f_r_hz, double istar_a,
                                            kin_circuit** out);
void kin_circuit_free(kin_circuit* circuit);

kin_status kin_circuit_derived(const kin_circuit* circuit, kin_derived* out);
kin_status kin_circuit_inductance(const kin_circuit* circuit, double phi_wb, int strict,
                                  double* out_h);
kin_status kin_circuit_energies(const kin_circuit* circuit, double phi_wb, double phidot_v,
                                double* u_c_j, double* u_l_j);
kin_status kin_circuit_alpha(const kin_circuit* circuit, int strict, double* out);
double kin_capacitance_for_frequency(double l0k_h, double f_r_hz);

/* ------------------------------------------------------------------ */
/* Fock spectrum of the weakly anharmonic Hamiltonian                  */

typedef struct kin_spectrum kin_spectrum;

kin_status kin_spectrum_compute(double f_r_hz, double lambda, int dim, int strict,
                                kin_spectrum** out);
void kin_spectrum_free(kin_spectrum* spectrum);
int kin_spectrum_dim(const kin_spectrum* spectrum);
double kin_spectrum_level(const kin_spectrum* spectrum, int n); /* E_n/h in Hz */
double kin_spectrum_f01(const kin_spectrum* spectrum);
double kin_spectrum_f12(const kin_spectrum* spectrum);
double kin_spectrum_alpha_rel(const kin_spectrum* spectrum);
double kin_spectrum_alpha_abs(const kin_spectrum* spectrum);

/* First-order closed form; independent of the diagonalization. */
double kin_perturbative_level(double f_r_hz, double lambda, int n);

/* ------------------------------------------------------------------ */
/* Materials                                                           */

typedef struct kin_registry kin_registry;
typedef struct kin_material kin_material; /* borrowed from the registry */

kin_status kin_registry_create(kin_registry** out); /* TiN, NbN, NbTiN, Al built in */
void kin_registry_free(kin_registry* registry);
size_t kin_registry_count(const kin_registry* registry);
const char* kin_registry_name(const kin_registry* registry, size_t index);
kin_status kin_registry_find(const kin_registry* registry, const char* name,
                             const kin_material** out);
/* Units: Delta in meV, N0 in eV^-1 um^-3, rho_n in uOhm cm (pass rho_n < 0
 * to leave it unset). */
kin_status kin_registry_add(kin_registry* registry, const char* name, double tc_k,
                            double delta_mev, double n0_per_ev_um3, double rho_n_uohm_cm,
                            double xi);

double kin_material_tc_k(const kin_material* material);
double kin_material_delta_j(const kin_material* material);
double kin_material_n0_per_j_m3(const kin_material* material);
double kin_material_xi(const kin_material* material);
int kin_material_has_rho_n(const kin_material* material);
double kin_material_rho_n_ohm_m(const kin_material* material); /* 0 if unset */
double kin_material_gap_frequency_hz(const kin_material* material);

kin_status kin_material_istar(const kin_material* material, double w_m, double l_m, double t_m,
                              double* out_a);
kin_status kin_material_sheet_inductance(const kin_material* material, double t_m,
                                         double* out_h_per_sq);
kin_status kin_material_nanowire_lumped(const kin_material* material, double w_m, double l_m,
                                        double t_m, double* l0k_h, double* istar_a);
kin_status kin_material_alpha_volume(const kin_material* material, double f_r_hz, double v_m3,
                                     double* out);
kin_status kin_material_qp_thermal_factor(const kin_material* material, double t_k,
                                          int single_delta, double* out);
kin_status kin_material_qp_per_phonon(const kin_material* material, double nu_hz, double* out);
double kin_recombination_scaling(double tc_ref_k, double tc_k);

/* ------------------------------------------------------------------ */
/* Fabry-Perot readout resonator                                       */

typedef struct kin_network kin_network;

typedef struct kin_halfwave_design {
  double z0_ohm;       /* 50 */
  double eps_eff;      /* 6.45 */
  double f0_design_hz; /* 100e9 */
  double coupling_c_f; /* 1e-15 */
  double zref_ohm;     /* 50 */
  double loss_np_m;    /* 0 */
  double l0k_h;        /* nanowire */
  double istar_a;
} kin_halfwave_design;

void kin_halfwave_design_init(kin_halfwave_design* design); /* documented defaults */
kin_status kin_network_create_halfwave(const kin_halfwave_design* design, kin_network** out);
kin_status kin_network_create_from_json(const char* json_text, kin_network** out);
void kin_network_free(kin_network* network);

kin_status kin_network_s21(const kin_network* network, double f_hz, double* re, double* im);
/* Fills f/re/im arrays of length n with the small-signal sweep. */
kin_status kin_network_sweep(const kin_network* network, double f_start_hz, double f_stop_hz,
                             size_t n, double* f_hz, double* re, double* im);

typedef struct kin_resonance {
  double f0_hz;
  double q_loaded;
  double bandwidth_hz;
  double s21_min;
  int is_dip;
} kin_resonance;

/* Locates the single resonance in sampled data (any source). */
kin_status kin_find_resonance(const double* f_hz, const double* re, const double* im, size_t n,
                              kin_resonance* out);

typedef struct kin_duffing {
  double f0_small_hz;
  double f0_shifted_hz;
  double delta_f_hz;
  double n_photons;
  double i_rms_a;
  double l_k_h;
  int iterations;
  int converged;
  /* On KIN_EBIFURCATION both branch resonances are reported here. */
  double branch_low_hz;
  double branch_high_hz;
} kin_duffing;

kin_status kin_network_duffing(const kin_network* network, double drive_power_w, int strict,
                               kin_duffing* out);
/* Literal criterion delta_f > n B / (2 pi); returns 0/1, -1 on bad input. */
int kin_readout_ok(double delta_f_hz, double n_photons, double bandwidth_hz);

/* ------------------------------------------------------------------ */
/* Rectangular cavity and coupled qubit-cavity system                  */

typedef enum kin_mode_family { KIN_TE = 0, KIN_TM = 1 } kin_mode_family;

kin_status kin_cavity_mode_frequency(double a_m, double b_m, double d_m, double eps_eff, int m,
                                     int n, int p, kin_mode_family family, double* out_hz);
kin_status kin_cavity_loading_for_target(double a_m, double b_m, double d_m, int m, int n, int p,
                                         kin_mode_family family, double f_target_hz,
                                         double* out_eps_eff);

typedef struct kin_coupled_params {
  double f_cavity_hz;
  double f_qubit_hz;
  double lambda_q;
  double g_hz;
  double kappa1_hz;
  double kappa2_hz;
  double gamma_hz;
  int dim_cavity; /* 0 -> default */
  int dim_qubit;  /* 0 -> default */
} kin_coupled_params;

typedef struct kin_dressed kin_dressed;

kin_status kin_dressed_compute(const kin_coupled_params* params, int strict, kin_dressed** out);
void kin_dressed_free(kin_dressed* dressed);
size_t kin_dressed_count(const kin_dressed* dressed);
double kin_dressed_level(const kin_dressed* dressed, size_t index);
double kin_dressed_f_cavity(const kin_dressed* dressed);
double kin_dressed_f_qubit(const kin_dressed* dressed);
double kin_dressed_chi(const kin_dressed* dressed);

kin_status kin_coupled_s21(const kin_coupled_params* params, const double* f_hz, size_t n,
                           double* re, double* im);

/* ------------------------------------------------------------------ */
/* Config-driven sweeps                                                */

typedef struct kin_sweep_report {
  size_t points_total;
  size_t points_failed;
  unsigned long long config_fnv1a;
} kin_sweep_report;

/* Validates only; on KIN_EPARSE kin_last_error() holds every violation. */
kin_status kin_sweep_validate(const char* config_json);

/* Runs the sweep and writes the output file. out_path/format NULL keep the
 * config values; format is "csv" or "contour". Returns KIN_EPOINTS when the
 * file was written but some points carry failure reason codes. */
kin_status kin_sweep_run(const char* config_json, const char* out_path, const char* format,
                         int strict, kin_sweep_report* report);

/* Same, but returns the emitted text; free with kin_string_free. */
kin_status kin_sweep_run_to_string(const char* config_json, const char* format, int strict,
                                   char** out_text, kin_sweep_report* report);
void kin_string_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* KINETICON_H */
