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

#ifndef KINETICON_CORE_CAVITY_HPP
#define KINETICON_CORE_CAVITY_HPP

#include <complex>
#include <span>
#include <vector>

#include "error.hpp"

namespace kineticon {

// Rectangular 3-D cavity. Axis convention: a = width along x, b = height
// along y, d = depth along z; TE/TM indices (m, n, p) count half-wavelengths
// along (x, y, z). Dielectric loading is a single effective permittivity.
struct RectCavity {
  double a_m;
  double b_m;
  double d_m;
  double eps_eff = 1.0;

  RectCavity(double a, double b, double d, double eps = 1.0);
};

enum class ModeFamily { te, tm };

// f = c / (2 sqrt(eps_eff)) * sqrt((m/a)^2 + (n/b)^2 + (p/d)^2).
// Index rules under this convention: TE requires m, n >= 0 not both zero,
// p >= 0, and at least two nonzero indices overall; TM requires m, n >= 1,
// p >= 0. Anything else raises mode_index.
double mode_frequency(const RectCavity& cavity, int m, int n, int p, ModeFamily family);

// eps_eff that pulls the selected empty-cavity mode down to f_target;
// exact round trip through mode_frequency.
double loading_for_target(const RectCavity& cavity, int m, int n, int p, ModeFamily family,
                          double f_target_hz);

// Two-mode cavity-qubit model, H/h in Hz:
//   f_c a^dag a + f_q b^dag b + (lambda_q f_q / 4)(b^dag + b)^4
//     + g (a^dag b + a b^dag)
struct CoupledSystem {
  double f_cavity_hz;
  double f_qubit_hz;
  double lambda_q = 0.0;
  double g_hz = 0.0;
  double kappa1_hz = 0.0;
  double kappa2_hz = 0.0;
  double gamma_hz = 0.0;
  int dim_cavity = 6;
  int dim_qubit = 10;
};

struct DressedSpectrum {
  std::vector<double> levels;    // ascending, Hz, relative to nothing (raw eigenvalues)
  double f_cavity_dressed = 0.0; // E(1,0) - E(0,0) by bare-state overlap
  double f_qubit_dressed = 0.0;  // E(0,1) - E(0,0)
  double chi_hz = 0.0;           // half the cavity pull between qubit manifolds
};

// Dense diagonalization on the truncated product space with a +10 truncation
// re-check on the identified quantities.
DressedSpectrum dressed_spectrum(const CoupledSystem& system, Diagnostics* diag = nullptr);

// Independent second-order estimate of chi used as the oracle for
// dressed_spectrum: chi = g^2 (1/Delta_0 - 1/Delta_1) with
// Delta_n = f_q (1 + 3 lambda_q (n+1)) - f_c.
double chi_perturbative(const CoupledSystem& system);

// Linear-response transmission of the coupled system,
// S21(f) = sqrt(k1 k2) / (i(f - f_c) + (k1 + k2)/2 + g^2/(i(f - f_q) + gamma/2)).
std::complex<double> s21_coupled_at(const CoupledSystem& system, double f_hz);
std::vector<std::pair<double, std::complex<double>>> s21_coupled(
    const CoupledSystem& system, std::span<const double> freqs_hz);

}  // namespace kineticon

#endif  // KINETICON_CORE_CAVITY_HPP
