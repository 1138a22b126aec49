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

#ifndef KINETICON_CORE_CONSTANTS_HPP
#define KINETICON_CORE_CONSTANTS_HPP

#include <numbers>

namespace kineticon::constants {

// CODATA 2018. h, e, k_B and c are exact by definition of the SI.
inline constexpr char version[] = "codata2018";

inline constexpr double planck_j_s = 6.62607015e-34;
inline constexpr double hbar_j_s = planck_j_s / (2.0 * std::numbers::pi);
inline constexpr double elementary_charge_c = 1.602176634e-19;
inline constexpr double boltzmann_j_per_k = 1.380649e-23;
inline constexpr double speed_of_light_m_s = 299792458.0;

// Unit conversions used at the config boundary (everything internal is SI).
inline constexpr double joule_per_ev = elementary_charge_c;
inline constexpr double ev_per_joule = 1.0 / joule_per_ev;

}  // namespace kineticon::constants

#endif  // KINETICON_CORE_CONSTANTS_HPP
