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

#include "cavity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "constants.hpp"
#include "linalg.hpp"
#include "quantum.hpp"

namespace kineticon {

RectCavity::RectCavity(double a, double b, double d, double eps)
    : a_m(a), b_m(b), d_m(d), eps_eff(eps) {
  if (!(a > 0.0 && b > 0.0 && d > 0.0))
    raise(ErrorCode::invalid_argument, "cavity dimensions must be positive");
  if (!(eps >= 1.0)) raise(ErrorCode::invalid_argument, "eps_eff must be >= 1");
}

namespace {

void check_mode_indices(int m, int n, int p, ModeFamily family) {
  if (m < 0 || n < 0 || p < 0) raise(ErrorCode::mode_index, "mode indices must be nonnegative");
  if (family == ModeFamily::te) {
    if (m == 0 && n == 0) raise(ErrorCode::mode_index, "TE mode needs m or n nonzero");
    const int nonzero = (m > 0) + (n > 0) + (p > 0);
    if (nonzero < 2)
      raise(ErrorCode::mode_index, "TE mode needs at least two nonzero indices");
  } else {
    if (m < 1 || n < 1) raise(ErrorCode::mode_index, "TM mode needs m >= 1 and n >= 1");
  }
}

}  // namespace

double mode_frequency(const RectCavity& cavity, int m, int n, int p, ModeFamily family) {
  check_mode_indices(m, n, p, family);
  const double kx = m / cavity.a_m;
  const double ky = n / cavity.b_m;
  const double kz = p / cavity.d_m;
  return constants::speed_of_light_m_s / (2.0 * std::sqrt(cavity.eps_eff)) *
         std::sqrt(kx * kx + ky * ky + kz * kz);
}

double loading_for_target(const RectCavity& cavity, int m, int n, int p, ModeFamily family,
                          double f_target_hz) {
  if (!(f_target_hz > 0.0)) raise(ErrorCode::invalid_argument, "target frequency must be positive");
  RectCavity empty = cavity;
  empty.eps_eff = 1.0;
  const double f_empty = mode_frequency(empty, m, n, p, family);
  if (f_target_hz > f_empty)
    raise(ErrorCode::unreachable_loading,
          "target above the empty-cavity mode frequency; dielectric loading only "
          "lowers the mode");
  const double r = f_empty / f_target_hz;
  return r * r;
}

namespace {

// H/h on the product space |n_c, n_q>, index = n_c * dim_q + n_q.
Matrix coupled_hamiltonian(const CoupledSystem& sys, int dim_c, int dim_q) {
  const int dim = dim_c * dim_q;
  Matrix h(dim, dim);

  // Qubit quartic block, shared across cavity occupation.
  const LadderOps q = build_ladder_ops(dim_q);
  const Matrix xq = add(q.a, q.adag);
  const Matrix xq2 = multiply(xq, xq);
  const Matrix xq4 = multiply(xq2, xq2);
  const double quartic = sys.lambda_q * sys.f_qubit_hz / 4.0;

  auto idx = [dim_q](int nc, int nq) { return nc * dim_q + nq; };
  for (int nc = 0; nc < dim_c; ++nc) {
    for (int nq = 0; nq < dim_q; ++nq) {
      const int row = idx(nc, nq);
      h(row, row) += sys.f_cavity_hz * nc + sys.f_qubit_hz * nq;
      for (int nq2 = 0; nq2 < dim_q; ++nq2)
        h(row, idx(nc, nq2)) += quartic * xq4(nq, nq2);
      // g (a^dag b + a b^dag): <nc+1, nq-1| a^dag b |nc, nq>
      if (nc + 1 < dim_c && nq - 1 >= 0) {
        const double amp = sys.g_hz * std::sqrt(static_cast<double>(nc + 1)) *
                           std::sqrt(static_cast<double>(nq));
        h(idx(nc + 1, nq - 1), row) += amp;
        h(row, idx(nc + 1, nq - 1)) += amp;
      }
    }
  }
  return h;
}

struct Identified {
  std::vector<double> levels;
  double e00, e10, e01, e11;
};

Identified identify(const CoupledSystem& sys, int dim_c, int dim_q) {
  const Matrix h = coupled_hamiltonian(sys, dim_c, dim_q);
  const EigResult eig = eig_sym(h);
  auto idx = [dim_q](int nc, int nq) { return nc * dim_q + nq; };
  auto pick = [&](int nc, int nq) {
    const std::size_t row = static_cast<std::size_t>(idx(nc, nq));
    std::size_t best = 0;
    double best_overlap = -1.0;
    for (std::size_t k = 0; k < eig.values.size(); ++k) {
      const double overlap = std::abs(eig.vectors(row, k));
      if (overlap > best_overlap) {
        best_overlap = overlap;
        best = k;
      }
    }
    return eig.values[best];
  };
  return Identified{eig.values, pick(0, 0), pick(1, 0), pick(0, 1), pick(1, 1)};
}

}  // namespace

DressedSpectrum dressed_spectrum(const CoupledSystem& sys, Diagnostics* diag) {
  if (!(sys.f_cavity_hz > 0.0 && sys.f_qubit_hz > 0.0))
    raise(ErrorCode::invalid_argument, "mode frequencies must be positive");
  if (sys.dim_cavity < 2 || sys.dim_qubit < 2)
    raise(ErrorCode::invalid_argument, "truncations must be >= 2");
  if (sys.g_hz < 0.0 || sys.kappa1_hz < 0.0 || sys.kappa2_hz < 0.0 || sys.gamma_hz < 0.0)
    raise(ErrorCode::invalid_argument, "rates must be nonnegative");
  if (sys.g_hz > 0.05 * std::min(sys.f_cavity_hz, sys.f_qubit_hz))
    warn_or_collect(diag, ErrorCode::validity,
                    "g/f above 0.05; the rotating-wave coupling form drops relevant "
                    "counter-rotating terms");

  const Identified base = identify(sys, sys.dim_cavity, sys.dim_qubit);
  const Identified check = identify(sys, sys.dim_cavity + 10, sys.dim_qubit + 10);

  // Compare the sorted low-lying levels, which are insensitive to how the
  // dressed states are labeled.
  const double scale = std::max(sys.f_cavity_hz, sys.f_qubit_hz);
  const std::size_t compared = std::min<std::size_t>(6, base.levels.size());
  for (std::size_t i = 0; i < compared; ++i)
    if (std::abs(base.levels[i] - check.levels[i]) > 1e-9 * scale)
      raise(ErrorCode::convergence,
            "dressed spectrum not converged: low-lying levels move between the "
            "truncation and its +10 re-check");

  DressedSpectrum out;
  out.levels = base.levels;
  out.f_cavity_dressed = base.e10 - base.e00;
  out.f_qubit_dressed = base.e01 - base.e00;
  out.chi_hz = 0.5 * ((base.e11 - base.e01) - (base.e10 - base.e00));
  return out;
}

double chi_perturbative(const CoupledSystem& sys) {
  const double d0 = perturbative_transition(sys.f_qubit_hz, sys.lambda_q, 0) - sys.f_cavity_hz;
  const double d1 = perturbative_transition(sys.f_qubit_hz, sys.lambda_q, 1) - sys.f_cavity_hz;
  if (d0 == 0.0 || d1 == 0.0)
    raise(ErrorCode::invalid_argument, "chi estimate undefined on resonance");
  return sys.g_hz * sys.g_hz * (1.0 / d0 - 1.0 / d1);
}

std::complex<double> s21_coupled_at(const CoupledSystem& sys, double f_hz) {
  if (!(sys.kappa1_hz > 0.0 && sys.kappa2_hz > 0.0))
    raise(ErrorCode::invalid_argument, "port rates must be positive");
  const std::complex<double> i{0.0, 1.0};
  std::complex<double> denom = i * (f_hz - sys.f_cavity_hz) + 0.5 * (sys.kappa1_hz + sys.kappa2_hz);
  if (sys.g_hz > 0.0)
    denom += sys.g_hz * sys.g_hz / (i * (f_hz - sys.f_qubit_hz) + 0.5 * sys.gamma_hz);
  return std::sqrt(sys.kappa1_hz * sys.kappa2_hz) / denom;
}

std::vector<std::pair<double, std::complex<double>>> s21_coupled(
    const CoupledSystem& sys, std::span<const double> freqs_hz) {
  std::vector<std::pair<double, std::complex<double>>> out;
  out.reserve(freqs_hz.size());
  for (double f : freqs_hz) out.emplace_back(f, s21_coupled_at(sys, f));
  return out;
}

}  // namespace kineticon
