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

#ifndef KINETICON_CORE_QUANTUM_HPP
#define KINETICON_CORE_QUANTUM_HPP

#include <string>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"

namespace kineticon {

// Truncated Fock-space ladder operators: a|n> = sqrt(n)|n-1>, adag = a^T.
// The commutator [a, adag] on the truncated space is the identity except for
// the last diagonal entry, which equals 1 - dim.
struct LadderOps {
  int dim;
  Matrix a;
  Matrix adag;
};

LadderOps build_ladder_ops(int dim);

// Diagonal of [a, adag] for the given truncation; (1, 1, ..., 1, 1 - dim).
std::vector<double> commutator_diagonal(const LadderOps& ops);

// H/h for the weakly anharmonic oscillator,
//   H/h = f_r [ adag a + 1/2 + (lambda/4) (adag + a)^4 ],
// as a dim x dim real symmetric matrix with entries in Hz.
Matrix build_hamiltonian(double f_r_hz, double lambda, int dim);

struct FockSpectrum {
  int dim = 0;
  std::vector<double> levels;  // E_n/h in Hz, ascending
  double f01 = 0.0;            // Hz
  double f12 = 0.0;            // Hz
  double alpha_rel = 0.0;      // |f01 - f12| / f01
  double alpha_abs = 0.0;      // |f01 - f12| in Hz
};

// Diagonalizes the truncated Hamiltonian and re-checks at dim+10: the levels
// entering the reported transitions (E0, E1, E2) must be stable to 1e-9
// relative or a convergence error is thrown.
FockSpectrum spectrum(double f_r_hz, double lambda, int dim = 40,
                      Diagnostics* diag = nullptr);

// First-order closed form E_n/h = f_r [n + 1/2 + (lambda/4)(6n^2 + 6n + 3)].
// Independent oracle for the exact diagonalization; no truncation involved.
double perturbative_level(double f_r_hz, double lambda, int n);

// Perturbative transition frequency f_{n -> n+1} = f_r (1 + 3 lambda (n+1)).
double perturbative_transition(double f_r_hz, double lambda, int n);

}  // namespace kineticon

#endif  // KINETICON_CORE_QUANTUM_HPP
