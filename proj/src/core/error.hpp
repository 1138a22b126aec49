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

#ifndef KINETICON_CORE_ERROR_HPP
#define KINETICON_CORE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace kineticon {

enum class ErrorCode {
  invalid_argument,    // precondition violated (bad dimension, non-positive value, ...)
  domain,              // non-finite input
  validity,            // model validity bound exceeded (|phi/phi*|, |lambda|, ...)
  convergence,         // truncation or fixed-point iteration did not converge
  bifurcation,         // Duffing iteration found multiple branches
  ambiguous_resonance, // zero or several resonances in the sweep window
  incomplete_material, // operation needs a field (rho_n) the record does not carry
  unknown_material,    // name not present in the registry
  mode_index,          // invalid cavity mode index combination
  unreachable_loading, // requested f_target not reachable with eps_eff >= 1
  parse,               // config validation failed
  io,                  // file I/O failed
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Duffing bifurcation carries both branch resonances so callers can report
// the fold instead of silently picking a side.
class BifurcationError : public Error {
 public:
  BifurcationError(const std::string& message, double f0_low_hz, double f0_high_hz)
      : Error(ErrorCode::bifurcation, message),
        f0_low_hz_(f0_low_hz),
        f0_high_hz_(f0_high_hz) {}
  double f0_low_hz() const noexcept { return f0_low_hz_; }
  double f0_high_hz() const noexcept { return f0_high_hz_; }

 private:
  double f0_low_hz_;
  double f0_high_hz_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

// Validity warnings are soft by default and become hard errors under the
// strict policy (CLI --strict).
struct Diagnostics {
  bool strict = false;
  std::vector<std::string> warnings;

  void warn(ErrorCode code, const std::string& message) {
    if (strict) raise(code, message);
    warnings.push_back(message);
  }
};

inline void warn_or_collect(Diagnostics* diag, ErrorCode code, const std::string& message) {
  if (diag) diag->warn(code, message);
}

}  // namespace kineticon

#endif  // KINETICON_CORE_ERROR_HPP
