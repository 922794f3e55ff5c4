// Copyright 2026 The jjvar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JJVAR_CONSTANTS_HPP
#define JJVAR_CONSTANTS_HPP

#include <numbers>

namespace jjvar {

/// CODATA physical constants (SI). hbar is derived from h so that
/// h == 2*pi*hbar holds exactly in double precision.
struct PhysicalConstants {
    double h;    // Planck constant (J s)
    double hbar; // reduced Planck constant (J s)
    double e;    // elementary charge (C)
    double m_e;  // electron mass (kg)
};

inline constexpr PhysicalConstants codata{
    6.62607015e-34,
    6.62607015e-34 / (2.0 * std::numbers::pi),
    1.602176634e-19,
    9.1093837015e-31,
};

// External quantities are carried in eV / meV / nm / GHz (and S, S/nm^2 for
// conductances); everything below the public API boundary is SI. These
// helpers are the single conversion point.
namespace units {

inline constexpr double ev_to_joule(double ev) { return ev * codata.e; }
inline constexpr double joule_to_ev(double j) { return j / codata.e; }
inline constexpr double mev_to_joule(double mev) { return mev * 1e-3 * codata.e; }
inline constexpr double nm_to_m(double nm) { return nm * 1e-9; }
inline constexpr double m_to_nm(double m) { return m * 1e9; }
inline constexpr double nm2_to_m2(double nm2) { return nm2 * 1e-18; }
inline constexpr double per_m_to_per_nm(double k) { return k * 1e-9; }

// energy (J) -> frequency E/h (GHz)
inline constexpr double joule_to_ghz(double j) { return j / codata.h * 1e-9; }

// conductance per area
inline constexpr double s_per_m2_to_s_per_nm2(double g) { return g * 1e-18; }
inline constexpr double s_per_nm2_to_s_per_m2(double g) { return g * 1e18; }

} // namespace units

} // namespace jjvar

#endif // JJVAR_CONSTANTS_HPP
