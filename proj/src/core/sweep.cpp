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

#include "sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "circuit.hpp"
#include "constants.hpp"

namespace kineticon {

using nlohmann::json;

const char* sweep_mode_name(SweepMode mode) {
  switch (mode) {
    case SweepMode::alpha_vs_l_istar: return "alpha_vs_L_Istar";
    case SweepMode::alpha_vs_dimension: return "alpha_vs_dimension";
    case SweepMode::resonator_s21: return "resonator_s21";
    case SweepMode::duffing_power: return "duffing_power";
    case SweepMode::cavity_modes: return "cavity_modes";
    case SweepMode::coupled_s21: return "coupled_s21";
  }
  return "unknown";
}

std::vector<double> AxisSpec::values() const {
  std::vector<double> out;
  out.reserve(points);
  if (log_scale) {
    const double la = std::log(start);
    const double lb = std::log(stop);
    for (std::size_t i = 0; i < points; ++i) {
      if (i == 0)
        out.push_back(start);
      else if (i + 1 == points)
        out.push_back(stop);
      else
        out.push_back(std::exp(la + (lb - la) * static_cast<double>(i) /
                                        static_cast<double>(points - 1)));
    }
  } else {
    const double step = (stop - start) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i)
      out.push_back(i + 1 == points ? stop : start + step * static_cast<double>(i));
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Config parsing.

namespace {

class ValidationLog {
 public:
  void add(const std::string& message) { messages_.push_back(message); }
  bool ok() const { return messages_.empty(); }
  [[noreturn]] void throw_all() const {
    std::string joined = "config validation failed:";
    for (const std::string& m : messages_) joined += "\n  - " + m;
    raise(ErrorCode::parse, joined);
  }
  void finish() const {
    if (!ok()) throw_all();
  }

 private:
  std::vector<std::string> messages_;
};

double number_or(ValidationLog& log, const json& obj, const char* key, double fallback,
                 bool required, const char* where) {
  if (!obj.contains(key)) {
    if (required) log.add(std::string(where) + ": missing required key '" + key + "'");
    return fallback;
  }
  if (!obj[key].is_number()) {
    log.add(std::string(where) + ": key '" + key + "' must be a number");
    return fallback;
  }
  return obj[key].get<double>();
}

NetworkElement parse_element(ValidationLog& log, const json& e, std::size_t index) {
  const std::string where = "network element " + std::to_string(index);
  if (!e.is_object() || !e.contains("type") || !e["type"].is_string()) {
    log.add(where + ": needs a string 'type'");
    return make_series_resistor(0.0);
  }
  const std::string type = e["type"].get<std::string>();
  try {
    if (type == "line") {
      const double z0 = number_or(log, e, "z0", 50.0, true, where.c_str());
      const double length = number_or(log, e, "length", 0.0, true, where.c_str());
      const double loss = number_or(log, e, "loss", 0.0, false, where.c_str());
      double v_ph = 0.0;
      if (e.contains("v_ph"))
        v_ph = number_or(log, e, "v_ph", 0.0, true, where.c_str());
      else if (e.contains("eps_eff"))
        v_ph = constants::speed_of_light_m_s /
               std::sqrt(number_or(log, e, "eps_eff", 1.0, true, where.c_str()));
      else
        log.add(where + ": line needs 'v_ph' or 'eps_eff'");
      if (!log.ok()) return make_series_resistor(0.0);
      return make_line(z0, v_ph, length, loss);
    }
    if (type == "series_inductor")
      return make_series_inductor(number_or(log, e, "l", 0.0, true, where.c_str()));
    if (type == "series_capacitor")
      return make_series_capacitor(number_or(log, e, "c", 1.0, true, where.c_str()));
    if (type == "series_resistor")
      return make_series_resistor(number_or(log, e, "r", 0.0, true, where.c_str()));
    if (type == "shunt_inductor")
      return make_shunt_inductor(number_or(log, e, "l", 1.0, true, where.c_str()));
    if (type == "shunt_capacitor")
      return make_shunt_capacitor(number_or(log, e, "c", 0.0, true, where.c_str()));
    if (type == "shunt_resistor")
      return make_shunt_resistor(number_or(log, e, "r", 1.0, true, where.c_str()));
  } catch (const Error& err) {
    log.add(where + ": " + err.what());
    return make_series_resistor(0.0);
  }
  log.add(where + ": unknown element type '" + type + "'");
  return make_series_resistor(0.0);
}

ResonatorNetwork parse_network_object(ValidationLog& log, const json& obj) {
  ResonatorNetwork net;
  if (!obj.is_object()) {
    log.add("network: must be an object");
    return net;
  }
  net.zref_ohm = number_or(log, obj, "zref", 50.0, false, "network");
  if (!obj.contains("nanowire") || !obj["nanowire"].is_object()) {
    log.add("network: missing 'nanowire' object");
  } else {
    const json& nw = obj["nanowire"];
    net.nanowire.l0k_h = number_or(log, nw, "l0k", 0.0, true, "network.nanowire");
    net.nanowire.istar_a = number_or(log, nw, "istar", 0.0, true, "network.nanowire");
    if (!nw.contains("index") || !nw["index"].is_number_unsigned())
      log.add("network.nanowire: missing nonnegative integer 'index'");
    else
      net.nanowire_index = nw["index"].get<std::size_t>();
  }
  if (!obj.contains("elements") || !obj["elements"].is_array() || obj["elements"].empty()) {
    log.add("network: needs a nonempty 'elements' array");
  } else {
    std::size_t i = 0;
    for (const json& e : obj["elements"]) net.elements.push_back(parse_element(log, e, i++));
  }
  if (net.nanowire_index > net.elements.size())
    log.add("network.nanowire.index must be within [0, elements.size()]");
  return net;
}

// Builder shorthand: nanowire parameters plus optional half-wave geometry.
ResonatorNetwork parse_network_fixed(ValidationLog& log, const json& fixed, const char* where) {
  if (fixed.contains("network")) return parse_network_object(log, fixed["network"]);
  HalfwaveDesign d;
  d.nanowire.l0k_h = number_or(log, fixed, "l0k", 0.0, true, where);
  d.nanowire.istar_a = number_or(log, fixed, "istar", 0.0, true, where);
  d.z0_ohm = number_or(log, fixed, "z0", d.z0_ohm, false, where);
  d.eps_eff = number_or(log, fixed, "eps_eff", d.eps_eff, false, where);
  d.f0_design_hz = number_or(log, fixed, "f0_design", d.f0_design_hz, false, where);
  d.coupling_c_f = number_or(log, fixed, "coupling_c", d.coupling_c_f, false, where);
  d.zref_ohm = number_or(log, fixed, "zref", d.zref_ohm, false, where);
  d.loss_np_m = number_or(log, fixed, "loss", d.loss_np_m, false, where);
  if (!log.ok()) return ResonatorNetwork{};
  try {
    return make_halfwave_resonator(d);
  } catch (const Error& err) {
    log.add(std::string(where) + ": " + err.what());
    return ResonatorNetwork{};
  }
}

void parse_materials(ValidationLog& log, const json& doc, SweepConfig& config) {
  if (!doc.contains("materials")) return;
  if (!doc["materials"].is_array()) {
    log.add("materials: must be an array of names or records");
    return;
  }
  for (const json& entry : doc["materials"]) {
    if (entry.is_string()) {
      const std::string name = entry.get<std::string>();
      if (!config.registry.contains(name)) {
        std::string msg = "unknown material '" + name + "'; available:";
        for (const std::string& n : config.registry.names()) msg += " " + n;
        log.add(msg);
        continue;
      }
      config.material_names.push_back(name);
    } else if (entry.is_object()) {
      if (!entry.contains("name") || !entry["name"].is_string()) {
        log.add("material record: needs a string 'name'");
        continue;
      }
      const std::string name = entry["name"].get<std::string>();
      const std::string where = "material '" + name + "'";
      std::optional<double> rho;
      if (entry.contains("rho_n_uohm_cm"))
        rho = number_or(log, entry, "rho_n_uohm_cm", 0.0, true, where.c_str());
      try {
        config.registry.add(Material::from_customary_units(
            name, number_or(log, entry, "tc_k", 0.0, true, where.c_str()),
            number_or(log, entry, "delta_mev", 0.0, true, where.c_str()),
            number_or(log, entry, "n0_per_ev_um3", 0.0, true, where.c_str()), rho,
            number_or(log, entry, "xi", 0.5, false, where.c_str())));
        config.material_names.push_back(name);
      } catch (const Error& err) {
        log.add(where + ": " + err.what());
      }
    } else {
      log.add("materials: entries must be strings or objects");
    }
  }
}

void check_axes(ValidationLog& log, const SweepConfig& config,
                const std::vector<std::string>& expected) {
  if (config.axes.size() != expected.size()) {
    std::string msg = "mode " + std::string(sweep_mode_name(config.mode)) + " needs " +
                      std::to_string(expected.size()) + " axes (";
    for (std::size_t i = 0; i < expected.size(); ++i)
      msg += (i ? ", " : "") + expected[i];
    msg += "), got " + std::to_string(config.axes.size());
    log.add(msg);
    return;
  }
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (config.axes[i].name != expected[i])
      log.add("axis " + std::to_string(i) + " must be named '" + expected[i] + "', got '" +
              config.axes[i].name + "'");
}

}  // namespace

ResonatorNetwork network_from_json_text(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    raise(ErrorCode::parse, std::string("network JSON is not well formed: ") + e.what());
  }
  ValidationLog log;
  ResonatorNetwork net = parse_network_object(log, doc);
  log.finish();
  return net;
}

SweepConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    raise(ErrorCode::parse, std::string("config is not well-formed JSON: ") + e.what());
  }
  if (!doc.is_object()) raise(ErrorCode::parse, "config root must be a JSON object");

  ValidationLog log;
  SweepConfig config;
  config.config_hash = fnv1a64(json_text);

  if (doc.contains("schema_version")) {
    if (!doc["schema_version"].is_number_integer())
      log.add("schema_version must be an integer");
    else if ((config.schema_version = doc["schema_version"].get<int>()) != 1)
      log.add("unsupported schema_version " + std::to_string(config.schema_version));
  }

  bool mode_known = false;
  if (!doc.contains("mode") || !doc["mode"].is_string()) {
    log.add("missing string 'mode'");
  } else {
    const std::string mode = doc["mode"].get<std::string>();
    mode_known = true;
    if (mode == "alpha_vs_L_Istar")
      config.mode = SweepMode::alpha_vs_l_istar;
    else if (mode == "alpha_vs_dimension")
      config.mode = SweepMode::alpha_vs_dimension;
    else if (mode == "resonator_s21")
      config.mode = SweepMode::resonator_s21;
    else if (mode == "duffing_power")
      config.mode = SweepMode::duffing_power;
    else if (mode == "cavity_modes")
      config.mode = SweepMode::cavity_modes;
    else if (mode == "coupled_s21")
      config.mode = SweepMode::coupled_s21;
    else {
      mode_known = false;
      log.add("unknown mode '" + mode +
              "'; expected one of alpha_vs_L_Istar, alpha_vs_dimension, resonator_s21, "
              "duffing_power, cavity_modes, coupled_s21");
    }
  }

  if (doc.contains("axes")) {
    if (!doc["axes"].is_array()) {
      log.add("axes must be an array");
    } else {
      std::size_t i = 0;
      for (const json& a : doc["axes"]) {
        AxisSpec axis;
        const std::string where = "axis " + std::to_string(i++);
        if (!a.is_object()) {
          log.add(where + " must be an object");
          continue;
        }
        if (a.contains("name") && a["name"].is_string())
          axis.name = a["name"].get<std::string>();
        else
          log.add(where + ": missing string 'name'");
        axis.start = number_or(log, a, "start", 0.0, true, where.c_str());
        axis.stop = number_or(log, a, "stop", 0.0, true, where.c_str());
        if (a.contains("points") && a["points"].is_number_unsigned())
          axis.points = a["points"].get<std::size_t>();
        else
          log.add(where + ": missing nonnegative integer 'points'");
        if (a.contains("scale")) {
          const std::string scale = a["scale"].is_string() ? a["scale"].get<std::string>() : "";
          if (scale == "log")
            axis.log_scale = true;
          else if (scale != "linear")
            log.add(where + " ('" + axis.name + "'): scale must be 'linear' or 'log'");
        }
        if (axis.points < 2) log.add(where + " ('" + axis.name + "'): points must be >= 2");
        if (!(axis.start < axis.stop))
          log.add(where + " ('" + axis.name + "'): start must be < stop");
        if (axis.log_scale && !(axis.start > 0.0))
          log.add(where + " ('" + axis.name + "'): log axis needs positive bounds");
        config.axes.push_back(std::move(axis));
      }
    }
  }

  parse_materials(log, doc, config);

  if (doc.contains("output")) {
    const json& out = doc["output"];
    if (!out.is_object()) {
      log.add("output must be an object");
    } else {
      if (out.contains("path") && out["path"].is_string())
        config.output.path = out["path"].get<std::string>();
      if (out.contains("format")) {
        const std::string fmt = out["format"].is_string() ? out["format"].get<std::string>() : "";
        if (fmt == "csv")
          config.output.format = OutputFormat::csv;
        else if (fmt == "contour")
          config.output.format = OutputFormat::contour;
        else
          log.add("output.format must be 'csv' or 'contour'");
      }
    }
  }

  const json fixed = doc.contains("fixed") && doc["fixed"].is_object() ? doc["fixed"]
                                                                       : json::object();
  if (doc.contains("fixed") && !doc["fixed"].is_object()) log.add("fixed must be an object");

  if (mode_known) {
    switch (config.mode) {
      case SweepMode::alpha_vs_l_istar: {
        check_axes(log, config, {"L", "Istar"});
        AlphaLIstarParams p{};
        p.f_r_hz = number_or(log, fixed, "f_r", 0.0, true, "fixed");
        if (fixed.contains("f_r") && !(p.f_r_hz > 0.0)) log.add("fixed.f_r must be positive");
        config.params = p;
        break;
      }
      case SweepMode::alpha_vs_dimension: {
        check_axes(log, config, {"dimension_um"});
        AlphaDimensionParams p{};
        p.f_r_hz = number_or(log, fixed, "f_r", 0.0, true, "fixed");
        p.t_nm = number_or(log, fixed, "t_nm", 0.0, true, "fixed");
        if (fixed.contains("t_nm") && !(p.t_nm > 0.0)) log.add("fixed.t_nm must be positive");
        if (config.material_names.empty())
          log.add("alpha_vs_dimension needs at least one material");
        config.params = p;
        break;
      }
      case SweepMode::resonator_s21: {
        check_axes(log, config, {"f"});
        config.params = ResonatorS21Params{parse_network_fixed(log, fixed, "fixed")};
        break;
      }
      case SweepMode::duffing_power: {
        check_axes(log, config, {"power"});
        config.params = DuffingPowerParams{parse_network_fixed(log, fixed, "fixed")};
        break;
      }
      case SweepMode::cavity_modes: {
        check_axes(log, config, {});
        CavityModesParams p{};
        p.a_m = number_or(log, fixed, "a", 0.0, true, "fixed");
        p.b_m = number_or(log, fixed, "b", 0.0, true, "fixed");
        p.d_m = number_or(log, fixed, "d", 0.0, true, "fixed");
        p.eps_eff = number_or(log, fixed, "eps_eff", 1.0, false, "fixed");
        p.max_index = static_cast<int>(number_or(log, fixed, "max_index", 2.0, false, "fixed"));
        if (p.max_index < 1) log.add("fixed.max_index must be >= 1");
        config.params = p;
        break;
      }
      case SweepMode::coupled_s21: {
        check_axes(log, config, {"f"});
        CoupledS21Params p{};
        p.system.f_cavity_hz = number_or(log, fixed, "f_cavity", 0.0, true, "fixed");
        p.system.f_qubit_hz = number_or(log, fixed, "f_qubit", 0.0, true, "fixed");
        p.system.lambda_q = number_or(log, fixed, "lambda_q", 0.0, false, "fixed");
        p.system.g_hz = number_or(log, fixed, "g", 0.0, true, "fixed");
        p.system.kappa1_hz = number_or(log, fixed, "kappa1", 0.0, true, "fixed");
        p.system.kappa2_hz = number_or(log, fixed, "kappa2", 0.0, true, "fixed");
        p.system.gamma_hz = number_or(log, fixed, "gamma", 0.0, true, "fixed");
        config.params = p;
        break;
      }
    }
  }

  if (config.output.format == OutputFormat::contour && config.axes.size() != 2)
    log.add("contour output needs exactly 2 axes");

  log.finish();
  return config;
}

// ---------------------------------------------------------------------------
// Running.

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void run_alpha_l_istar(const SweepConfig& config, const RunOptions& options,
                       SweepResult& result) {
  const auto& p = std::get<AlphaLIstarParams>(config.params);
  result.columns = {"L", "Istar", "alpha", "reason"};
  const std::vector<double> ls = config.axes[0].values();
  const std::vector<double> is = config.axes[1].values();
  result.axis0_points = ls.size();
  result.axis1_points = is.size();
  for (double l : ls) {
    for (double istar : is) {
      std::vector<SweepCell> row{SweepCell::num(l), SweepCell::num(istar)};
      try {
        Diagnostics diag{options.strict, {}};
        const KineticonCircuit circuit(l, capacitor_for_frequency(l, p.f_r_hz), istar);
        row.push_back(SweepCell::num(alpha_perturbative(circuit, &diag)));
        row.push_back(SweepCell::str("ok"));
      } catch (const Error& e) {
        row.push_back(SweepCell::num(kNaN));
        row.push_back(SweepCell::str(error_code_name(e.code())));
        ++result.failed_points;
      }
      result.rows.push_back(std::move(row));
    }
  }
}

void run_alpha_dimension(const SweepConfig& config, const RunOptions& options,
                         SweepResult& result) {
  const auto& p = std::get<AlphaDimensionParams>(config.params);
  result.columns = {"material", "dimension_um", "alpha", "reason"};
  const std::vector<double> dims = config.axes[0].values();
  result.axis0_points = config.material_names.size();
  result.axis1_points = dims.size();
  const double t_m = p.t_nm * 1e-9;
  for (const std::string& name : config.material_names) {
    const Material& material = config.registry.get(name);
    for (double dim_um : dims) {
      std::vector<SweepCell> row{SweepCell::str(name), SweepCell::num(dim_um)};
      try {
        (void)options;
        const double w = dim_um * 1e-6;
        const NanowireGeometry geom(w, w, t_m);
        row.push_back(SweepCell::num(alpha_volume(material, p.f_r_hz, geom.volume_m3())));
        row.push_back(SweepCell::str("ok"));
      } catch (const Error& e) {
        row.push_back(SweepCell::num(kNaN));
        row.push_back(SweepCell::str(error_code_name(e.code())));
        ++result.failed_points;
      }
      result.rows.push_back(std::move(row));
    }
  }
}

void run_resonator_s21(const SweepConfig& config, SweepResult& result) {
  const auto& p = std::get<ResonatorS21Params>(config.params);
  result.columns = {"f_hz", "s21_re", "s21_im", "s21_db"};
  for (double f : config.axes[0].values()) {
    const Complex s = network_s21(p.network, f, p.network.nanowire.l0k_h);
    result.rows.push_back({SweepCell::num(f), SweepCell::num(s.real()),
                           SweepCell::num(s.imag()),
                           SweepCell::num(20.0 * std::log10(std::abs(s)))});
  }
}

void run_duffing_power(const SweepConfig& config, const RunOptions& options,
                       SweepResult& result) {
  const auto& p = std::get<DuffingPowerParams>(config.params);
  result.columns = {"power_w", "f0_hz", "delta_f_hz", "n_photons", "readout_ok", "reason"};

  // Small-signal bandwidth for the readout criterion.
  const DuffingResult small = duffing_shift(p.network, 0.0);
  const auto sweep = sweep_s21(p.network, 0.9 * small.f0_small_hz, 1.1 * small.f0_small_hz, 4001);
  const double bandwidth = find_resonance(sweep).bandwidth_hz;

  for (double power : config.axes[0].values()) {
    std::vector<SweepCell> row{SweepCell::num(power)};
    try {
      Diagnostics diag{options.strict, {}};
      const DuffingResult r = duffing_shift(p.network, power, &diag);
      const bool ok = readout_ok(std::abs(r.delta_f_hz), r.n_photons, bandwidth);
      row.push_back(SweepCell::num(r.f0_shifted_hz));
      row.push_back(SweepCell::num(r.delta_f_hz));
      row.push_back(SweepCell::num(r.n_photons));
      row.push_back(SweepCell::num(ok ? 1.0 : 0.0));
      row.push_back(SweepCell::str("ok"));
    } catch (const Error& e) {
      for (int k = 0; k < 4; ++k) row.push_back(SweepCell::num(kNaN));
      row.push_back(SweepCell::str(error_code_name(e.code())));
      ++result.failed_points;
    }
    result.rows.push_back(std::move(row));
  }
}

void run_cavity_modes(const SweepConfig& config, SweepResult& result) {
  const auto& p = std::get<CavityModesParams>(config.params);
  result.columns = {"family", "m", "n", "p", "f_hz"};
  const RectCavity cavity(p.a_m, p.b_m, p.d_m, p.eps_eff);
  struct ModeRow {
    const char* family;
    int m, n, pp;
    double f;
  };
  std::vector<ModeRow> modes;
  for (int m = 0; m <= p.max_index; ++m)
    for (int n = 0; n <= p.max_index; ++n)
      for (int pp = 0; pp <= p.max_index; ++pp) {
        try {
          modes.push_back({"TE", m, n, pp, mode_frequency(cavity, m, n, pp, ModeFamily::te)});
        } catch (const Error&) {
        }
        try {
          modes.push_back({"TM", m, n, pp, mode_frequency(cavity, m, n, pp, ModeFamily::tm)});
        } catch (const Error&) {
        }
      }
  std::stable_sort(modes.begin(), modes.end(), [](const ModeRow& a, const ModeRow& b) {
    return a.f < b.f;
  });
  for (const ModeRow& m : modes)
    result.rows.push_back({SweepCell::str(m.family), SweepCell::num(m.m), SweepCell::num(m.n),
                           SweepCell::num(m.pp), SweepCell::num(m.f)});
}

void run_coupled_s21(const SweepConfig& config, SweepResult& result) {
  const auto& p = std::get<CoupledS21Params>(config.params);
  result.columns = {"f_hz", "s21_re", "s21_im", "s21_db"};
  for (double f : config.axes[0].values()) {
    const std::complex<double> s = s21_coupled_at(p.system, f);
    result.rows.push_back({SweepCell::num(f), SweepCell::num(s.real()),
                           SweepCell::num(s.imag()),
                           SweepCell::num(20.0 * std::log10(std::abs(s)))});
  }
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config, const RunOptions& options) {
  SweepResult result;
  {
    std::ostringstream prov;
    prov << "kineticon-sweep schema_version=" << config.schema_version
         << " mode=" << sweep_mode_name(config.mode) << " config_fnv1a=" << std::hex
         << config.config_hash << std::dec << " constants=" << constants::version;
    result.provenance = prov.str();
  }
  switch (config.mode) {
    case SweepMode::alpha_vs_l_istar: run_alpha_l_istar(config, options, result); break;
    case SweepMode::alpha_vs_dimension: run_alpha_dimension(config, options, result); break;
    case SweepMode::resonator_s21: run_resonator_s21(config, result); break;
    case SweepMode::duffing_power: run_duffing_power(config, options, result); break;
    case SweepMode::cavity_modes: run_cavity_modes(config, result); break;
    case SweepMode::coupled_s21: run_coupled_s21(config, result); break;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Emission.

namespace {

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string cell_text(const SweepCell& cell) {
  return cell.is_text ? cell.text : format_number(cell.number);
}

}  // namespace

std::string emit_to_string(const SweepResult& result, OutputFormat format) {
  std::string out;
  out += "# " + result.provenance + "\n";
  if (format == OutputFormat::csv) {
    for (std::size_t i = 0; i < result.columns.size(); ++i) {
      if (i) out += ',';
      out += csv_quote(result.columns[i]);
    }
    out += '\n';
    for (const auto& row : result.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += csv_quote(cell_text(row[i]));
      }
      out += '\n';
    }
    return out;
  }
  // gnuplot-style contour blocks: one block per outer-axis scanline.
  if (result.axis0_points == 0 || result.axis1_points == 0 ||
      result.axis0_points * result.axis1_points != result.rows.size())
    raise(ErrorCode::parse, "contour output needs a 2-axis grid result");
  out += "#";
  for (const std::string& c : result.columns) out += " " + c;
  out += '\n';
  for (std::size_t block = 0; block < result.axis0_points; ++block) {
    if (block) out += '\n';
    for (std::size_t line = 0; line < result.axis1_points; ++line) {
      const auto& row = result.rows[block * result.axis1_points + line];
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ' ';
        out += cell_text(row[i]);
      }
      out += '\n';
    }
  }
  return out;
}

void emit_to_file(const SweepResult& result, const std::string& path, OutputFormat format) {
  const std::string text = emit_to_string(result, format);
  std::ofstream file(path, std::ios::binary);
  if (!file) raise(ErrorCode::io, "cannot open '" + path + "' for writing");
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!file) raise(ErrorCode::io, "write to '" + path + "' failed");
}

}  // namespace kineticon
