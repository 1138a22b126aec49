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

#ifndef KINETICON_CORE_LINALG_HPP
#define KINETICON_CORE_LINALG_HPP

#include <cstddef>
#include <vector>

namespace kineticon {

// Dense row-major real matrix. Small sizes only (Fock truncations and
// product spaces up to a few hundred); no blocking or views needed.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  static Matrix identity(std::size_t n);
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix add(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& m, double s);

// max |a(i,j)|
double max_abs(const Matrix& m);
// max |a(i,j) - a(j,i)|
double max_asymmetry(const Matrix& m);

struct EigResult {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k pairs with values[k]
};

// Eigendecomposition of a real symmetric matrix: Householder reduction to
// tridiagonal form followed by implicit-shift QL, eigenvalues sorted
// ascending with the eigenvector columns permuted to match.
//
// Rejects input whose relative asymmetry exceeds 1e-12 (contract violation)
// and throws ErrorCode::convergence if the QL iteration stalls.
EigResult eig_sym(const Matrix& m);
std::vector<double> eig_sym_values(const Matrix& m);

// ||H v - lambda v||_2 / ||H||_F for one eigenpair; test and contract helper.
double eig_residual(const Matrix& m, const EigResult& eig, std::size_t k);

}  // namespace kineticon

#endif  // KINETICON_CORE_LINALG_HPP
