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

#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "error.hpp"

namespace kineticon {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) raise(ErrorCode::invalid_argument, "matrix shape mismatch in multiply");
  Matrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < b.cols; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < a.cols; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  }
  return c;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}

Matrix add(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    raise(ErrorCode::invalid_argument, "matrix shape mismatch in add");
  Matrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] = a.data[i] + b.data[i];
  return c;
}

Matrix scale(const Matrix& m, double s) {
  Matrix c = m;
  for (double& v : c.data) v *= s;
  return c;
}

double max_abs(const Matrix& m) {
  double r = 0.0;
  for (double v : m.data) r = std::max(r, std::abs(v));
  return r;
}

double max_asymmetry(const Matrix& m) {
  double r = 0.0;
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = i + 1; j < m.cols; ++j)
      r = std::max(r, std::abs(m(i, j) - m(j, i)));
  return r;
}

namespace {

// Householder reduction of a symmetric matrix to tridiagonal form with
// accumulation of the orthogonal transform in z (EISPACK tred2 lineage).
void tred2(Matrix& z, std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(z.rows);
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  for (int i = n - 1; i > 0; --i) {
    const int l = i - 1;
    double h = 0.0;
    double scale = 0.0;
    if (l > 0) {
      for (int k = 0; k < i; ++k) scale += std::abs(z(i, k));
      if (scale == 0.0) {
        e[i] = z(i, l);
      } else {
        for (int k = 0; k < i; ++k) {
          z(i, k) /= scale;
          h += z(i, k) * z(i, k);
        }
        double f = z(i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        z(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j < i; ++j) {
          z(j, i) = z(i, j) / h;
          g = 0.0;
          for (int k = 0; k < j + 1; ++k) g += z(j, k) * z(i, k);
          for (int k = j + 1; k < i; ++k) g += z(k, j) * z(i, k);
          e[j] = g / h;
          f += e[j] * z(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j < i; ++j) {
          f = z(i, j);
          g = e[j] - hh * f;
          e[j] = g;
          for (int k = 0; k < j + 1; ++k) z(j, k) -= f * e[k] + g * z(i, k);
        }
      }
    } else {
      e[i] = z(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    if (d[i] != 0.0) {
      for (int j = 0; j < i; ++j) {
        double g = 0.0;
        for (int k = 0; k < i; ++k) g += z(i, k) * z(k, j);
        for (int k = 0; k < i; ++k) z(k, j) -= g * z(k, i);
      }
    }
    d[i] = z(i, i);
    z(i, i) = 1.0;
    for (int j = 0; j < i; ++j) {
      z(j, i) = 0.0;
      z(i, j) = 0.0;
    }
  }
}

// Implicit-shift QL on the tridiagonal (d, e), rotating the columns of z.
void tql2(std::vector<double>& d, std::vector<double>& e, Matrix& z) {
  const int n = static_cast<int>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60)
          raise(ErrorCode::convergence, "symmetric QL iteration failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * f;
            z(k, i) = c * z(k, i) - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

EigResult eig_sym(const Matrix& m) {
  if (m.rows != m.cols || m.rows == 0)
    raise(ErrorCode::invalid_argument, "eig_sym requires a nonempty square matrix");
  const double scale = max_abs(m);
  if (scale > 0.0 && max_asymmetry(m) > 1e-12 * scale)
    raise(ErrorCode::invalid_argument, "eig_sym input is not symmetric within 1e-12 relative");
  for (double v : m.data)
    if (!std::isfinite(v)) raise(ErrorCode::domain, "eig_sym input has non-finite entries");

  EigResult out;
  Matrix z = m;
  std::vector<double> e;
  tred2(z, out.values, e);
  tql2(out.values, e, z);

  std::vector<std::size_t> order(out.values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return out.values[a] < out.values[b]; });

  std::vector<double> sorted(out.values.size());
  Matrix vectors(z.rows, z.cols);
  for (std::size_t k = 0; k < order.size(); ++k) {
    sorted[k] = out.values[order[k]];
    for (std::size_t i = 0; i < z.rows; ++i) vectors(i, k) = z(i, order[k]);
  }
  out.values = std::move(sorted);
  out.vectors = std::move(vectors);
  return out;
}

std::vector<double> eig_sym_values(const Matrix& m) { return eig_sym(m).values; }

double eig_residual(const Matrix& m, const EigResult& eig, std::size_t k) {
  const std::size_t n = m.rows;
  double frob = 0.0;
  for (double v : m.data) frob += v * v;
  frob = std::sqrt(frob);
  double res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double hv = 0.0;
    for (std::size_t j = 0; j < n; ++j) hv += m(i, j) * eig.vectors(j, k);
    const double r = hv - eig.values[k] * eig.vectors(i, k);
    res += r * r;
  }
  return std::sqrt(res) / (frob > 0.0 ? frob : 1.0);
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::domain: return "domain";
    case ErrorCode::validity: return "validity";
    case ErrorCode::convergence: return "convergence";
    case ErrorCode::bifurcation: return "bifurcation";
    case ErrorCode::ambiguous_resonance: return "ambiguous_resonance";
    case ErrorCode::incomplete_material: return "incomplete_material";
    case ErrorCode::unknown_material: return "unknown_material";
    case ErrorCode::mode_index: return "mode_index";
    case ErrorCode::unreachable_loading: return "unreachable_loading";
    case ErrorCode::parse: return "parse";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

}  // namespace kineticon
