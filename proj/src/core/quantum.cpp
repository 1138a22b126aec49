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

#include "quantum.hpp"

#include <cmath>
#include <string>

namespace kineticon {

LadderOps build_ladder_ops(int dim) {
  if (dim < 2) raise(ErrorCode::invalid_argument, "ladder operators need dim >= 2");
  LadderOps ops;
  ops.dim = dim;
  ops.a = Matrix(dim, dim);
  for (int n = 1; n < dim; ++n) ops.a(n - 1, n) = std::sqrt(static_cast<double>(n));
  ops.adag = transpose(ops.a);
  return ops;
}

std::vector<double> commutator_diagonal(const LadderOps& ops) {
  const Matrix c = add(multiply(ops.a, ops.adag), scale(multiply(ops.adag, ops.a), -1.0));
  std::vector<double> diag(ops.dim);
  for (int i = 0; i < ops.dim; ++i) diag[i] = c(i, i);
  return diag;
}

Matrix build_hamiltonian(double f_r_hz, double lambda, int dim) {
  if (!std::isfinite(f_r_hz) || !std::isfinite(lambda))
    raise(ErrorCode::domain, "hamiltonian inputs must be finite");
  if (f_r_hz <= 0.0) raise(ErrorCode::invalid_argument, "resonance frequency must be positive");
  if (dim < 4) raise(ErrorCode::invalid_argument, "quartic Hamiltonian needs dim >= 4");

  const LadderOps ops = build_ladder_ops(dim);
  const Matrix x = add(ops.a, ops.adag);
  const Matrix x2 = multiply(x, x);
  const Matrix x4 = multiply(x2, x2);

  Matrix h(dim, dim);
  for (int n = 0; n < dim; ++n) h(n, n) = f_r_hz * (n + 0.5);
  const double quartic = f_r_hz * lambda / 4.0;
  for (std::size_t i = 0; i < h.data.size(); ++i) h.data[i] += quartic * x4.data[i];
  return h;
}

namespace {

std::vector<double> low_levels(double f_r_hz, double lambda, int dim) {
  return eig_sym_values(build_hamiltonian(f_r_hz, lambda, dim));
}

}  // namespace

FockSpectrum spectrum(double f_r_hz, double lambda, int dim, Diagnostics* diag) {
  if (dim < 4) raise(ErrorCode::invalid_argument, "spectrum needs dim >= 4");
  if (dim < 20)
    warn_or_collect(diag, ErrorCode::validity,
                    "Fock truncation below the recommended dim = 20");
  const double spread = std::abs(lambda) * static_cast<double>(dim) * static_cast<double>(dim);
  if (spread >= 1.0)
    warn_or_collect(diag, ErrorCode::validity,
                    "|lambda|*dim^2 = " + std::to_string(spread) +
                        " is not small; upper levels are truncation dominated");

  const std::vector<double> levels = low_levels(f_r_hz, lambda, dim);
  const std::vector<double> recheck = low_levels(f_r_hz, lambda, dim + 10);
  for (int i = 0; i < 3; ++i) {
    const double ref = std::max(std::abs(recheck[i]), f_r_hz);
    if (std::abs(levels[i] - recheck[i]) > 1e-9 * ref)
      raise(ErrorCode::convergence,
            "spectrum truncation not converged: level " + std::to_string(i) +
                " moves by more than 1e-9 relative between dim and dim+10");
  }

  FockSpectrum out;
  out.dim = dim;
  out.levels = levels;
  out.f01 = levels[1] - levels[0];
  out.f12 = levels[2] - levels[1];
  out.alpha_abs = std::abs(out.f01 - out.f12);
  out.alpha_rel = out.alpha_abs / out.f01;
  return out;
}

double perturbative_level(double f_r_hz, double lambda, int n) {
  if (!std::isfinite(f_r_hz) || !std::isfinite(lambda))
    raise(ErrorCode::domain, "perturbative level inputs must be finite");
  if (n < 0) raise(ErrorCode::invalid_argument, "level index must be nonnegative");
  const double nn = static_cast<double>(n);
  return f_r_hz * (nn + 0.5 + lambda / 4.0 * (6.0 * nn * nn + 6.0 * nn + 3.0));
}

double perturbative_transition(double f_r_hz, double lambda, int n) {
  if (n < 0) raise(ErrorCode::invalid_argument, "transition index must be nonnegative");
  return f_r_hz * (1.0 + 3.0 * lambda * (n + 1.0));
}

}  // namespace kineticon
