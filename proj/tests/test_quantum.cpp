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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "core/error.hpp"
#include "core/quantum.hpp"

using kineticon::build_hamiltonian;
using kineticon::build_ladder_ops;
using kineticon::Diagnostics;
using kineticon::Error;
using kineticon::ErrorCode;
using kineticon::LadderOps;
using kineticon::Matrix;
using kineticon::spectrum;

TEST_CASE("ladder operators at the smallest sizes") {
  const LadderOps two = build_ladder_ops(2);
  CHECK(two.a(0, 1) == 1.0);
  CHECK(two.a(0, 0) == 0.0);
  CHECK(two.a(1, 0) == 0.0);
  CHECK(two.a(1, 1) == 0.0);
  CHECK(two.adag(1, 0) == 1.0);

  const LadderOps three = build_ladder_ops(3);
  CHECK(three.a(1, 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  CHECK_THROWS_AS(build_ladder_ops(1), Error);
}

TEST_CASE("commutator truncation identity, dim 2..64") {
  for (int dim = 2; dim <= 64; ++dim) {
    const LadderOps ops = build_ladder_ops(dim);
    const Matrix c = kineticon::add(kineticon::multiply(ops.a, ops.adag),
                                    kineticon::scale(kineticon::multiply(ops.adag, ops.a), -1.0));
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        if (i == j) continue;
        CHECK(c(i, j) == 0.0);  // disjoint sparsity: exactly zero
      }
      const double expected = (i == dim - 1) ? 1.0 - dim : 1.0;
      CHECK(std::llround(c(i, i)) == std::llround(expected));
      CHECK(std::abs(c(i, i) - expected) <=
            32.0 * std::numeric_limits<double>::epsilon() * dim);
    }
  }
}

TEST_CASE("commutator diagonal at dim 4 is (1,1,1,-3)") {
  const auto diag = kineticon::commutator_diagonal(build_ladder_ops(4));
  REQUIRE(diag.size() == 4);
  CHECK(diag[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(diag[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(diag[2] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(diag[3] == doctest::Approx(-3.0).epsilon(1e-14));
}

TEST_CASE("harmonic Hamiltonian diagonal and symmetry") {
  const double f_r = 100e9;
  const Matrix h = build_hamiltonian(f_r, 0.0, 6);
  for (int n = 0; n < 6; ++n)
    CHECK(h(n, n) == doctest::Approx(f_r * (n + 0.5)).epsilon(1e-15));

  const Matrix hq = build_hamiltonian(f_r, -1e-3, 12);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) CHECK(hq(i, j) == hq(j, i));  // bitwise symmetric

  // <0|(a^dag+a)^4|0> = 3, so H00 = f_r (1/2 + 3 lambda / 4).
  const Matrix h40 = build_hamiltonian(f_r, -1e-3, 40);
  CHECK(h40(0, 0) == doctest::Approx(49.925e9).epsilon(1e-12));

  CHECK_THROWS_AS(build_hamiltonian(f_r, 0.0, 3), Error);
  CHECK_THROWS_AS(build_hamiltonian(-f_r, 0.0, 8), Error);
  CHECK_THROWS_AS(build_hamiltonian(f_r, std::nan(""), 8), Error);
}

TEST_CASE("harmonic limit reproduces f_r(n + 1/2) below dim/2") {
  const double f_r = 100e9;
  const auto levels = kineticon::eig_sym_values(build_hamiltonian(f_r, 0.0, 24));
  for (int n = 0; n < 12; ++n)
    CHECK(levels[n] == doctest::Approx(f_r * (n + 0.5)).epsilon(1e-12));
}

TEST_CASE("spectrum in the harmonic limit") {
  const auto s = spectrum(100e9, 0.0, 30);
  CHECK(s.f01 == doctest::Approx(100e9).epsilon(1e-12));
  CHECK(s.f12 == doctest::Approx(100e9).epsilon(1e-12));
  CHECK(s.alpha_rel < 1e-12);
}

TEST_CASE("spectrum against the first-order perturbative oracle") {
  // alpha_rel -> 3|lambda| with a second-order correction.
  const auto s = spectrum(100e9, -1e-4, 40);
  CHECK(s.alpha_rel == doctest::Approx(3e-4).epsilon(0.01));

  const auto s3 = spectrum(100e9, -1e-3, 60);
  CHECK(s3.f01 == doctest::Approx(99.7e9).epsilon(1e-3));
}

TEST_CASE("perturbative convergence: deviation is second order with C < 20") {
  for (double lambda : {-1e-5, -1e-4, -1e-3}) {
    const auto s = spectrum(100e9, lambda, 40);
    const double deviation = std::abs(s.alpha_rel - 3.0 * std::abs(lambda));
    CHECK(deviation <= 20.0 * lambda * lambda);
  }
}

TEST_CASE("truncation stability between dim 40 and 60") {
  for (double lambda : {-1e-4, -1e-3}) {
    const auto a = spectrum(100e9, lambda, 40);
    const auto b = spectrum(100e9, lambda, 60);
    CHECK(std::abs(a.f01 - b.f01) <= 1e-9 * b.f01);
    CHECK(std::abs(a.f12 - b.f12) <= 1e-9 * b.f12);
  }
}

TEST_CASE("shift per photon matches f_r(1 + 3 lambda (n+1)) within 0.5%") {
  const double f_r = 100e9;
  const double lambda = -1e-3;
  const auto s = spectrum(f_r, lambda, 60);
  for (int n = 0; n <= 3; ++n) {
    const double exact = s.levels[n + 1] - s.levels[n];
    const double pert = kineticon::perturbative_transition(f_r, lambda, n);
    CHECK(exact == doctest::Approx(pert).epsilon(5e-3));
  }
}

TEST_CASE("perturbative level closed form") {
  CHECK(kineticon::perturbative_level(100e9, 0.0, 7) == doctest::Approx(750e9).epsilon(1e-15));
  CHECK(kineticon::perturbative_level(100e9, -1e-3, 0) ==
        doctest::Approx(49.925e9).epsilon(1e-15));
  CHECK(kineticon::perturbative_level(100e9, -1e-3, 1) ==
        doctest::Approx(149.625e9).epsilon(1e-15));
  CHECK_THROWS_AS(kineticon::perturbative_level(100e9, 0.0, -1), Error);
}

TEST_CASE("spectrum warnings and failure modes") {
  Diagnostics diag;
  (void)spectrum(100e9, -5e-3, 40, &diag);  // |lambda| dim^2 = 8
  CHECK(!diag.warnings.empty());

  Diagnostics strict{true, {}};
  CHECK_THROWS_AS((void)spectrum(100e9, -5e-3, 40, &strict), Error);

  // Truncated quartic turns the diagonal over well inside dim = 20 at this
  // lambda; the +10 re-check must flag it.
  try {
    (void)spectrum(1e9, -0.05, 20);
    FAIL("expected a convergence error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::convergence);
  }

  CHECK_THROWS_AS((void)spectrum(100e9, 0.0, 3), Error);
}
