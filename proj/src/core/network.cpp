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

#include "network.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "constants.hpp"

namespace kineticon {

namespace {

constexpr Complex kJ{0.0, 1.0};

void require_drive_frequency(double f_hz) {
  if (!(f_hz > 0.0) || !std::isfinite(f_hz))
    raise(ErrorCode::invalid_argument, "frequency must be positive and finite");
}

void validate_line(const TransmissionLine& tl) {
  if (!(tl.z0_ohm > 0.0)) raise(ErrorCode::invalid_argument, "line Z0 must be positive");
  if (!(tl.v_ph_m_s > 0.0) || tl.v_ph_m_s > constants::speed_of_light_m_s)
    raise(ErrorCode::invalid_argument, "line phase velocity must be in (0, c]");
  if (tl.length_m < 0.0) raise(ErrorCode::invalid_argument, "line length must be nonnegative");
  if (tl.loss_np_m < 0.0) raise(ErrorCode::invalid_argument, "line loss must be nonnegative");
}

}  // namespace

NetworkElement make_line(double z0_ohm, double v_ph_m_s, double length_m, double loss_np_m) {
  TransmissionLine tl{z0_ohm, v_ph_m_s, length_m, loss_np_m};
  validate_line(tl);
  return tl;
}

NetworkElement make_series_inductor(double l_h) {
  if (!(l_h >= 0.0)) raise(ErrorCode::invalid_argument, "inductance must be nonnegative");
  return SeriesImpedance{[l_h](double f) {
    return kJ * (2.0 * std::numbers::pi * f * l_h);
  }};
}

NetworkElement make_series_capacitor(double c_f) {
  if (!(c_f > 0.0)) raise(ErrorCode::invalid_argument, "capacitance must be positive");
  return SeriesImpedance{[c_f](double f) {
    return -kJ / (2.0 * std::numbers::pi * f * c_f);
  }};
}

NetworkElement make_series_resistor(double r_ohm) {
  if (!(r_ohm >= 0.0)) raise(ErrorCode::invalid_argument, "resistance must be nonnegative");
  return SeriesImpedance{[r_ohm](double) { return Complex{r_ohm, 0.0}; }};
}

NetworkElement make_shunt_inductor(double l_h) {
  if (!(l_h > 0.0)) raise(ErrorCode::invalid_argument, "inductance must be positive");
  return ShuntAdmittance{[l_h](double f) {
    return -kJ / (2.0 * std::numbers::pi * f * l_h);
  }};
}

NetworkElement make_shunt_capacitor(double c_f) {
  if (!(c_f >= 0.0)) raise(ErrorCode::invalid_argument, "capacitance must be nonnegative");
  return ShuntAdmittance{[c_f](double f) {
    return kJ * (2.0 * std::numbers::pi * f * c_f);
  }};
}

NetworkElement make_shunt_resistor(double r_ohm) {
  if (!(r_ohm > 0.0)) raise(ErrorCode::invalid_argument, "resistance must be positive");
  return ShuntAdmittance{[r_ohm](double) { return Complex{1.0 / r_ohm, 0.0}; }};
}

Abcd Abcd::operator*(const Abcd& rhs) const {
  return Abcd{
      a * rhs.a + b * rhs.c,
      a * rhs.b + b * rhs.d,
      c * rhs.a + d * rhs.c,
      c * rhs.b + d * rhs.d,
  };
}

Abcd Abcd::inverse() const {
  const Complex det_v = det();
  return Abcd{d / det_v, -b / det_v, -c / det_v, a / det_v};
}

Abcd abcd(const NetworkElement& element, double f_hz) {
  require_drive_frequency(f_hz);
  return std::visit(
      [f_hz](const auto& e) -> Abcd {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, TransmissionLine>) {
          validate_line(e);
          const double beta = 2.0 * std::numbers::pi * f_hz / e.v_ph_m_s;
          const Complex gamma_l = Complex{e.loss_np_m, beta} * e.length_m;
          const Complex ch = std::cosh(gamma_l);
          const Complex sh = std::sinh(gamma_l);
          return Abcd{ch, e.z0_ohm * sh, sh / e.z0_ohm, ch};
        } else if constexpr (std::is_same_v<T, SeriesImpedance>) {
          return Abcd{Complex{1.0, 0.0}, e.z(f_hz), Complex{0.0, 0.0}, Complex{1.0, 0.0}};
        } else {
          return Abcd{Complex{1.0, 0.0}, Complex{0.0, 0.0}, e.y(f_hz), Complex{1.0, 0.0}};
        }
      },
      element);
}

Abcd cascade(std::span<const NetworkElement> elements, double f_hz) {
  if (elements.empty()) raise(ErrorCode::invalid_argument, "cascade of an empty element list");
  Abcd m;
  for (const NetworkElement& e : elements) m = m * abcd(e, f_hz);
  return m;
}

namespace {

Complex s_denominator(const Abcd& m, double zref_ohm) {
  return m.a + m.b / zref_ohm + m.c * zref_ohm + m.d;
}

}  // namespace

Complex s21(const Abcd& m, double zref_ohm) {
  if (!(zref_ohm > 0.0)) raise(ErrorCode::invalid_argument, "reference impedance must be positive");
  return 2.0 / s_denominator(m, zref_ohm);
}

Complex s11(const Abcd& m, double zref_ohm) {
  if (!(zref_ohm > 0.0)) raise(ErrorCode::invalid_argument, "reference impedance must be positive");
  return (m.a + m.b / zref_ohm - m.c * zref_ohm - m.d) / s_denominator(m, zref_ohm);
}

// ---------------------------------------------------------------------------
// Resonance location on sampled data.

namespace {

double median_of(std::vector<double> v) {
  const std::size_t n = v.size();
  std::nth_element(v.begin(), v.begin() + n / 2, v.end());
  return v[n / 2];
}

// Vertex of the parabola through three points; x2 if degenerate.
double parabola_vertex(double x1, double y1, double x2, double y2, double x3, double y3) {
  const double num = (x2 - x1) * (x2 - x1) * (y2 - y3) - (x2 - x3) * (x2 - x3) * (y2 - y1);
  const double den = (x2 - x1) * (y2 - y3) - (x2 - x3) * (y2 - y1);
  if (den == 0.0) return x2;
  return x2 - 0.5 * num / den;
}

}  // namespace

ResonanceResult find_resonance(std::span<const SweepPoint> points) {
  const std::size_t n = points.size();
  if (n < 5) raise(ErrorCode::invalid_argument, "resonance search needs at least 5 points");

  std::vector<double> power(n);
  for (std::size_t i = 0; i < n; ++i) power[i] = std::norm(points[i].s21);
  const double baseline = median_of(power);

  std::size_t ext = 0;
  double max_dev = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dev = std::abs(power[i] - baseline);
    if (dev > max_dev) {
      max_dev = dev;
      ext = i;
    }
  }
  const double scale = std::max(baseline, power[ext]);
  if (!(max_dev > 1e-6 * std::max(scale, 1e-300)))
    raise(ErrorCode::ambiguous_resonance, "no resonance feature found in the sweep");
  if (ext == 0 || ext == n - 1)
    raise(ErrorCode::ambiguous_resonance, "resonance extremum at the edge of the sweep range");

  const bool is_dip = power[ext] < baseline;
  // Count disjoint runs beyond the half-deviation threshold.
  const double threshold = baseline + 0.5 * (power[ext] - baseline);
  std::size_t features = 0;
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const bool beyond = is_dip ? (power[i] <= threshold) : (power[i] >= threshold);
    if (beyond && !inside) ++features;
    inside = beyond;
  }
  if (features != 1)
    raise(ErrorCode::ambiguous_resonance,
          std::to_string(features) + " resonance features in the sweep range, expected 1");

  ResonanceResult out;
  out.is_dip = is_dip;
  out.f0_hz = parabola_vertex(points[ext - 1].f_hz, power[ext - 1], points[ext].f_hz,
                              power[ext], points[ext + 1].f_hz, power[ext + 1]);
  out.s21_min = std::abs(points[ext].s21);

  const double half_level = 0.5 * (baseline + power[ext]);
  auto crossing = [&](bool leftward) -> double {
    std::size_t i = ext;
    while (true) {
      if (leftward ? i == 0 : i == n - 1)
        raise(ErrorCode::ambiguous_resonance, "half-power point outside the sweep range");
      const std::size_t j = leftward ? i - 1 : i + 1;
      const bool crossed = is_dip ? power[j] >= half_level : power[j] <= half_level;
      if (crossed) {
        const double t = (half_level - power[i]) / (power[j] - power[i]);
        return points[i].f_hz + t * (points[j].f_hz - points[i].f_hz);
      }
      i = j;
    }
  };
  const double f_left = crossing(true);
  const double f_right = crossing(false);
  out.bandwidth_hz = f_right - f_left;
  if (!(out.bandwidth_hz > 0.0))
    raise(ErrorCode::ambiguous_resonance, "degenerate half-power bandwidth");
  out.q_loaded = out.f0_hz / out.bandwidth_hz;
  return out;
}

// ---------------------------------------------------------------------------
// Resonator network.

ResonatorNetwork make_halfwave_resonator(const HalfwaveDesign& d) {
  if (!(d.eps_eff >= 1.0)) raise(ErrorCode::invalid_argument, "eps_eff must be >= 1");
  if (!(d.f0_design_hz > 0.0)) raise(ErrorCode::invalid_argument, "design frequency must be positive");
  if (!(d.zref_ohm > 0.0)) raise(ErrorCode::invalid_argument, "Zref must be positive");
  if (!(d.nanowire.l0k_h > 0.0 && d.nanowire.istar_a > 0.0))
    raise(ErrorCode::invalid_argument, "nanowire L0k and I_* must be positive");
  const double v_ph = constants::speed_of_light_m_s / std::sqrt(d.eps_eff);
  const double half_length = v_ph / (2.0 * d.f0_design_hz);

  ResonatorNetwork net;
  net.elements.push_back(make_series_capacitor(d.coupling_c_f));
  net.elements.push_back(make_line(d.z0_ohm, v_ph, half_length / 2.0, d.loss_np_m));
  net.elements.push_back(make_line(d.z0_ohm, v_ph, half_length / 2.0, d.loss_np_m));
  net.elements.push_back(make_series_capacitor(d.coupling_c_f));
  net.nanowire_index = 2;
  net.nanowire = d.nanowire;
  net.zref_ohm = d.zref_ohm;
  return net;
}

ResonatorNetwork reversed_network(const ResonatorNetwork& net) {
  ResonatorNetwork r = net;
  std::reverse(r.elements.begin(), r.elements.end());
  r.nanowire_index = net.elements.size() - net.nanowire_index;
  return r;
}

Abcd network_abcd(const ResonatorNetwork& net, double f_hz, double lk_h) {
  require_drive_frequency(f_hz);
  if (net.nanowire_index > net.elements.size())
    raise(ErrorCode::invalid_argument, "nanowire index outside the element chain");
  const Complex z_nw = kJ * (2.0 * std::numbers::pi * f_hz * lk_h);
  Abcd m;
  for (std::size_t pos = 0; pos <= net.elements.size(); ++pos) {
    if (pos == net.nanowire_index)
      m = m * Abcd{Complex{1.0, 0.0}, z_nw, Complex{0.0, 0.0}, Complex{1.0, 0.0}};
    if (pos < net.elements.size()) m = m * abcd(net.elements[pos], f_hz);
  }
  return m;
}

Complex network_s21(const ResonatorNetwork& net, double f_hz, double lk_h) {
  return s21(network_abcd(net, f_hz, lk_h), net.zref_ohm);
}

std::vector<SweepPoint> sweep_s21(const ResonatorNetwork& net, double f_start_hz,
                                  double f_stop_hz, std::size_t n_points) {
  if (!(f_start_hz > 0.0 && f_stop_hz > f_start_hz))
    raise(ErrorCode::invalid_argument, "sweep needs 0 < f_start < f_stop");
  if (n_points < 2) raise(ErrorCode::invalid_argument, "sweep needs at least 2 points");
  std::vector<SweepPoint> out;
  out.reserve(n_points);
  const double step = (f_stop_hz - f_start_hz) / static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double f = (i + 1 == n_points) ? f_stop_hz : f_start_hz + step * static_cast<double>(i);
    out.push_back(SweepPoint{f, network_s21(net, f, net.nanowire.l0k_h)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Driven solution and stored energy.

namespace {

// Time-averaged energy of a one-port reactance at rms current/voltage via the
// reactance theorem W = (1/2) |x_rms|^2 dX/domega.
double series_element_energy(const SeriesImpedance& e, double f_hz, const Complex& i_rms) {
  const double df = 1e-6 * f_hz;
  const double dx = std::imag(e.z(f_hz + df)) - std::imag(e.z(f_hz - df));
  const double slope = dx / (2.0 * std::numbers::pi * 2.0 * df);
  return 0.5 * std::norm(i_rms) * std::max(slope, 0.0);
}

double shunt_element_energy(const ShuntAdmittance& e, double f_hz, const Complex& v_rms) {
  const double df = 1e-6 * f_hz;
  const double db = std::imag(e.y(f_hz + df)) - std::imag(e.y(f_hz - df));
  const double slope = db / (2.0 * std::numbers::pi * 2.0 * df);
  return 0.5 * std::norm(v_rms) * std::max(slope, 0.0);
}

double line_energy(const TransmissionLine& tl, double f_hz, const Complex& v_in,
                   const Complex& i_in) {
  const double beta = 2.0 * std::numbers::pi * f_hz / tl.v_ph_m_s;
  const Complex gamma{tl.loss_np_m, beta};
  const double l_per = tl.z0_ohm / tl.v_ph_m_s;
  const double c_per = 1.0 / (tl.z0_ohm * tl.v_ph_m_s);
  const int intervals = 128;  // Simpson panels (even)
  const double h = tl.length_m / intervals;
  double sum = 0.0;
  for (int k = 0; k <= intervals; ++k) {
    const double x = h * k;
    const Complex ch = std::cosh(gamma * x);
    const Complex sh = std::sinh(gamma * x);
    const Complex v = ch * v_in - tl.z0_ohm * sh * i_in;
    const Complex i = -sh / tl.z0_ohm * v_in + ch * i_in;
    const double u = 0.5 * l_per * std::norm(i) + 0.5 * c_per * std::norm(v);
    const double w = (k == 0 || k == intervals) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    sum += w * u;
  }
  return sum * h / 3.0;
}

}  // namespace

PortSolution solve_ports(const ResonatorNetwork& net, double f_hz, double lk_h,
                         double drive_power_w) {
  if (!(drive_power_w >= 0.0) || !std::isfinite(drive_power_w))
    raise(ErrorCode::invalid_argument, "drive power must be nonnegative and finite");
  const Abcd total = network_abcd(net, f_hz, lk_h);
  const double zr = net.zref_ohm;
  const Complex zin = (total.a * zr + total.b) / (total.c * zr + total.d);
  const double vs_rms = std::sqrt(4.0 * zr * drive_power_w);  // available power P = Vs^2/(4 Zref)

  PortSolution sol{};
  sol.i1 = vs_rms / (zr + zin);
  sol.v1 = zin * sol.i1;

  const Complex z_nw = kJ * (2.0 * std::numbers::pi * f_hz * lk_h);
  Complex v = sol.v1;
  Complex i = sol.i1;
  double energy = 0.0;
  for (std::size_t pos = 0; pos <= net.elements.size(); ++pos) {
    if (pos == net.nanowire_index) {
      sol.i_nanowire = i;
      energy += 0.5 * lk_h * std::norm(i);
      v = v - z_nw * i;  // series element: same through current
    }
    if (pos < net.elements.size()) {
      const NetworkElement& e = net.elements[pos];
      if (const auto* tl = std::get_if<TransmissionLine>(&e)) {
        energy += line_energy(*tl, f_hz, v, i);
      } else if (const auto* se = std::get_if<SeriesImpedance>(&e)) {
        energy += series_element_energy(*se, f_hz, i);
      } else if (const auto* sh = std::get_if<ShuntAdmittance>(&e)) {
        energy += shunt_element_energy(*sh, f_hz, v);
      }
      const Abcd inv = abcd(e, f_hz).inverse();
      const Complex v_next = inv.a * v + inv.b * i;
      const Complex i_next = inv.c * v + inv.d * i;
      v = v_next;
      i = i_next;
    }
  }
  sol.v2 = v;
  sol.i2 = i;
  sol.stored_energy_j = energy;
  return sol;
}

// ---------------------------------------------------------------------------
// Duffing fixed point.

namespace {

struct Extremum {
  double f0;
  double power;     // |S21|^2 at the extremum
  double baseline;  // median |S21|^2 over the coarse scan
  bool is_dip;
};

double mag2(const ResonatorNetwork& net, double f, double lk) {
  return std::norm(network_s21(net, f, lk));
}

// Golden-section extremum refinement followed by bisection on a symmetric
// finite difference of |S21|^2; the derivative zero-crossing locates the
// extremum far below the sqrt(eps) floor of direct value comparison.
double refine_extremum(const ResonatorNetwork& net, double lk, double f_lo, double f_hi,
                       bool is_dip) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double sign = is_dip ? -1.0 : 1.0;
  auto value = [&](double f) { return sign * mag2(net, f, lk); };

  double a = f_lo, b = f_hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double y1 = value(x1), y2 = value(x2);
  for (int it = 0; it < 200 && (b - a) > 1e-9 * b; ++it) {
    if (y1 < y2) {
      a = x1;
      x1 = x2;
      y1 = y2;
      x2 = a + invphi * (b - a);
      y2 = value(x2);
    } else {
      b = x2;
      x2 = x1;
      y2 = y1;
      x1 = b - invphi * (b - a);
      y1 = value(x1);
    }
  }
  double fg = 0.5 * (a + b);

  const double h = 1e-9 * fg;
  auto slope = [&](double f) { return value(f + h) - value(f - h); };
  double w = std::max(1e-6 * fg, 20.0 * h);
  double lo = fg - w, hi = fg + w;
  bool bracketed = false;
  for (int attempt = 0; attempt < 8; ++attempt) {
    lo = std::max(lo, f_lo + h);
    hi = std::min(hi, f_hi - h);
    if (slope(lo) > 0.0 && slope(hi) < 0.0) {
      bracketed = true;
      break;
    }
    w *= 4.0;
    lo = fg - w;
    hi = fg + w;
  }
  if (!bracketed) return fg;
  for (int it = 0; it < 200 && (hi - lo) > 1e-13 * fg; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (slope(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Extremum locate_extremum_global(const ResonatorNetwork& net, double lk, double f_lo,
                                double f_hi) {
  const int n = 4001;
  std::vector<double> fs(n), ps(n);
  const double step = (f_hi - f_lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    fs[i] = f_lo + step * i;
    ps[i] = mag2(net, fs[i], lk);
  }
  const double baseline = median_of(ps);
  int ext = 0;
  double max_dev = -1.0;
  for (int i = 0; i < n; ++i) {
    const double dev = std::abs(ps[i] - baseline);
    if (dev > max_dev) {
      max_dev = dev;
      ext = i;
    }
  }
  if (ext < 2 || ext > n - 3)
    raise(ErrorCode::ambiguous_resonance, "no interior resonance in the search window");
  const bool is_dip = ps[ext] < baseline;
  const double f0 = refine_extremum(net, lk, fs[ext - 2], fs[ext + 2], is_dip);
  return Extremum{f0, mag2(net, f0, lk), baseline, is_dip};
}

// Half-power full width around a located extremum.
double measure_bandwidth(const ResonatorNetwork& net, double lk, const Extremum& ex,
                         double f_lo, double f_hi) {
  const double level = 0.5 * (ex.baseline + ex.power);
  auto beyond = [&](double f) {
    const double p = mag2(net, f, lk);
    return ex.is_dip ? p <= level : p >= level;
  };
  auto edge = [&](double direction) -> double {
    double step = 1e-6 * ex.f0;
    double inner = ex.f0;
    double outer = ex.f0 + direction * step;
    for (int k = 0; k < 60; ++k) {
      if (outer < f_lo || outer > f_hi)
        raise(ErrorCode::ambiguous_resonance, "half-power point outside the search window");
      if (!beyond(outer)) break;
      inner = outer;
      step *= 2.0;
      outer = ex.f0 + direction * step;
    }
    for (int k = 0; k < 80; ++k) {
      const double mid = 0.5 * (inner + outer);
      if (beyond(mid))
        inner = mid;
      else
        outer = mid;
    }
    return 0.5 * (inner + outer);
  };
  return edge(+1.0) - edge(-1.0);
}

// Half-wave window from the total electrical delay of the line sections.
std::pair<double, double> resonance_window(const ResonatorNetwork& net) {
  double delay = 0.0;
  for (const NetworkElement& e : net.elements)
    if (const auto* tl = std::get_if<TransmissionLine>(&e)) delay += tl->length_m / tl->v_ph_m_s;
  if (!(delay > 0.0))
    raise(ErrorCode::invalid_argument,
          "resonance window needs at least one transmission line in the network");
  const double f_hw = 1.0 / (2.0 * delay);
  return {0.5 * f_hw, 1.45 * f_hw};
}

}  // namespace

DuffingResult duffing_shift(const ResonatorNetwork& net, double drive_power_w,
                            Diagnostics* diag) {
  if (!(drive_power_w >= 0.0) || !std::isfinite(drive_power_w))
    raise(ErrorCode::invalid_argument, "drive power must be nonnegative and finite");
  const double l0k = net.nanowire.l0k_h;
  const double istar = net.nanowire.istar_a;
  if (!(l0k > 0.0 && istar > 0.0))
    raise(ErrorCode::invalid_argument, "nanowire L0k and I_* must be positive");

  const auto [f_lo, f_hi] = resonance_window(net);
  const Extremum small = locate_extremum_global(net, l0k, f_lo, f_hi);
  const double b_small = measure_bandwidth(net, l0k, small, f_lo, f_hi);

  DuffingResult out;
  out.f0_small_hz = small.f0;
  out.l_k_h = l0k;
  if (drive_power_w == 0.0) {
    out.f0_shifted_hz = small.f0;
    out.converged = true;
    return out;
  }

  bool warned = false;
  auto current_ratio = [&](double f, double lk) {
    const PortSolution sol = solve_ports(net, f, lk, drive_power_w);
    return std::abs(sol.i_nanowire) / istar;
  };
  auto locate_near = [&](double lk, double f_center) {
    const double w =
        std::max({10.0 * b_small, 8.0 * std::abs(f_center - small.f0), 1e-6 * small.f0});
    return refine_extremum(net, lk, std::max(f_lo, f_center - w),
                           std::min(f_hi, f_center + w), small.is_dip);
  };

  struct Branch {
    double lk;
    double f0;
    int iterations;
  };
  auto iterate = [&](double lk_init) -> Branch {
    double lk = lk_init;
    double f = lk_init == l0k ? small.f0 : locate_extremum_global(net, lk, f_lo, f_hi).f0;
    for (int it = 1; it <= 1000; ++it) {
      const double ratio = current_ratio(f, lk);
      if (ratio >= 1.0)
        raise(ErrorCode::validity,
              "nanowire rms current reached I_*; the inductance expansion is invalid "
              "at this drive power");
      if (ratio >= 0.5 && !warned) {
        warned = true;
        warn_or_collect(diag, ErrorCode::validity,
                        "nanowire rms current above 0.5 I_*; expansion accuracy degrades");
      }
      const double target = l0k * (1.0 + 3.0 * ratio * ratio);
      const double lk_new = lk + 0.5 * (target - lk);
      const double f_new = locate_near(lk_new, f);
      const bool done = it >= 2 && std::abs(f_new - f) <= 1e-12 * std::abs(f_new);
      lk = lk_new;
      f = f_new;
      if (done) return Branch{lk, f, it};
    }
    raise(ErrorCode::convergence, "Duffing fixed point did not converge in 1000 iterations");
  };

  const Branch low = iterate(l0k);
  // Second start displaced beyond the first fixed point probes for a fold.
  const double probe = l0k + 4.0 * (low.lk - l0k) + 1e-3 * l0k;
  const Branch high = iterate(probe);
  if (std::abs(high.f0 - low.f0) > 1e-9 * std::abs(low.f0))
    throw BifurcationError("Duffing iteration found two stable branches",
                           std::min(low.f0, high.f0), std::max(low.f0, high.f0));

  // Map derivative at the fixed point: |g'| >= 1 means the fold is reached
  // and the converged point is not a stable operating point.
  auto map_target = [&](double lk_probe) {
    const double f_probe = locate_near(lk_probe, low.f0);
    const double ratio = current_ratio(f_probe, lk_probe);
    return l0k * (1.0 + 3.0 * ratio * ratio);
  };
  const double dlk = 1e-4 * low.lk;
  const double gprime = (map_target(low.lk + dlk) - map_target(low.lk - dlk)) / (2.0 * dlk);
  if (std::abs(gprime) >= 1.0)
    throw BifurcationError("Duffing fixed point is unstable (bifurcation reached)", low.f0,
                           low.f0);

  const PortSolution sol = solve_ports(net, low.f0, low.lk, drive_power_w);
  out.f0_shifted_hz = low.f0;
  out.delta_f_hz = low.f0 - small.f0;
  out.n_photons = sol.stored_energy_j / (constants::planck_j_s * low.f0);
  out.i_rms_a = std::abs(sol.i_nanowire);
  out.l_k_h = low.lk;
  out.iterations = low.iterations;
  out.converged = true;
  return out;
}

bool readout_ok(double delta_f_hz, double n_photons, double bandwidth_hz) {
  if (!(delta_f_hz >= 0.0) || !(n_photons >= 0.0) || !(bandwidth_hz >= 0.0))
    raise(ErrorCode::invalid_argument, "readout criterion inputs must be nonnegative");
  return delta_f_hz > n_photons * bandwidth_hz / (2.0 * std::numbers::pi);
}

}  // namespace kineticon
