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

#ifndef KINETICON_CORE_SWEEP_HPP
#define KINETICON_CORE_SWEEP_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cavity.hpp"
#include "error.hpp"
#include "materials.hpp"
#include "network.hpp"

namespace kineticon {

enum class SweepMode {
  alpha_vs_l_istar,
  alpha_vs_dimension,
  resonator_s21,
  duffing_power,
  cavity_modes,
  coupled_s21,
};

const char* sweep_mode_name(SweepMode mode);

struct AxisSpec {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  std::size_t points = 0;
  bool log_scale = false;

  std::vector<double> values() const;
};

enum class OutputFormat { csv, contour };

struct OutputSpec {
  std::string path = "sweep.csv";
  OutputFormat format = OutputFormat::csv;
};

struct AlphaLIstarParams {
  double f_r_hz;
};
struct AlphaDimensionParams {
  double f_r_hz;
  double t_nm;
};
struct ResonatorS21Params {
  ResonatorNetwork network;
};
struct DuffingPowerParams {
  ResonatorNetwork network;
};
struct CavityModesParams {
  double a_m, b_m, d_m;
  double eps_eff = 1.0;
  int max_index = 2;
};
struct CoupledS21Params {
  CoupledSystem system;
};

using ModeParams = std::variant<AlphaLIstarParams, AlphaDimensionParams, ResonatorS21Params,
                                DuffingPowerParams, CavityModesParams, CoupledS21Params>;

struct SweepConfig {
  int schema_version = 1;
  SweepMode mode = SweepMode::alpha_vs_l_istar;
  std::vector<AxisSpec> axes;
  ModeParams params;
  MaterialRegistry registry;                // built-ins plus config records
  std::vector<std::string> material_names;  // selection, config order
  OutputSpec output;
  std::uint64_t config_hash = 0;            // FNV-1a of the raw config text
};

// Validates the whole document and reports every violation at once in the
// parse error message. Accepts built-in material names or inline records
// (units: Delta in meV, N0 in eV^-1 um^-3, rho_n in uOhm cm, geometry in
// nm/um as the key names state).
SweepConfig parse_config(const std::string& json_text);

// Parses the resonator network object schema (see docs/config_schema.md).
ResonatorNetwork network_from_json_text(const std::string& json_text);

struct SweepCell {
  bool is_text = false;
  double number = 0.0;
  std::string text;

  static SweepCell num(double v) { return SweepCell{false, v, {}}; }
  static SweepCell str(std::string s) { return SweepCell{true, 0.0, std::move(s)}; }
};

struct SweepResult {
  std::vector<std::string> columns;
  std::vector<std::vector<SweepCell>> rows;
  std::string provenance;  // leading comment line content
  std::size_t failed_points = 0;
  std::size_t axis0_points = 0;  // contour block structure
  std::size_t axis1_points = 0;
};

struct RunOptions {
  bool strict = false;
};

// Deterministic grid evaluation in row-major axis order; per-point failures
// are recorded in the reason column and never abort the sweep.
SweepResult run_sweep(const SweepConfig& config, const RunOptions& options = {});

std::string emit_to_string(const SweepResult& result, OutputFormat format);
void emit_to_file(const SweepResult& result, const std::string& path, OutputFormat format);

std::uint64_t fnv1a64(std::string_view text);

}  // namespace kineticon

#endif  // KINETICON_CORE_SWEEP_HPP
