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

#ifndef JJVAR_JOSEPHSON_HPP
#define JJVAR_JOSEPHSON_HPP

#include <cmath>
#include <numbers>
#include <span>

#include "jjvar/conductance_table.hpp"
#include "jjvar/constants.hpp"
#include "jjvar/errors.hpp"
#include "jjvar/random_field.hpp"
#include "jjvar/transport.hpp"

namespace jjvar {

/// Ambegaokar-Baratoff: I_c = pi Delta / (2 e R_N), E_J = (hbar / 2e) I_c.
/// Collapses to E_J/h = Delta G / (8 e^2); returned as E_J/h in GHz.
inline double ej_from_conductance(double g_total_s, const JunctionParams& p) {
    if (g_total_s < 0.0) {
        throw ComputationError("ej_from_conductance: negative conductance");
    }
    const double delta_j = units::mev_to_joule(p.gap_mev);
    const double i_c = std::numbers::pi * delta_j * g_total_s / (2.0 * codata.e);
    const double e_j = codata.hbar / (2.0 * codata.e) * i_c;
    return units::joule_to_ghz(e_j);
}

/// E_J/h (GHz) of a uniform barrier of width d.
inline double ej_uniform(double d_nm, const JunctionParams& p, double rel_tol = 1e-8) {
    const double g_total = conductance_density(d_nm, p, rel_tol) * p.area_nm2();
    return ej_from_conductance(g_total, p);
}

/// E_J/h (GHz) of a rough junction: per-pixel conductances add in parallel,
///   G = sum_px g(d_px) dx dy .
inline double ej_rough(const ThicknessMap& map, const ConductanceTable& table,
                       const JunctionParams& p) {
    if (std::fabs(map.grid.width_x_nm() - p.width_x_nm) > 1e-9 * p.width_x_nm ||
        std::fabs(map.grid.width_y_nm() - p.width_y_nm) > 1e-9 * p.width_y_nm) {
        throw ComputationError("ej_rough: thickness map does not tile the junction area");
    }
    double g_sum = 0.0; // S/nm^2, accumulated over pixels
    for (double d : map.values) g_sum += table.g_s_per_nm2(d);
    const double g_total = g_sum * map.grid.pixel_area_nm2();
    return ej_from_conductance(g_total, p);
}

namespace short_junction {

/// Zero-temperature short-junction supercurrent of discrete channels:
///   I(phi) = (e Delta / 2 hbar) sum_n tau_n sin(phi) / sqrt(1 - tau_n sin^2(phi/2)).
inline double channel_sum(std::span<const double> taus, double phi) {
    const double s = std::sin(phi);
    const double sh2 = std::sin(phi / 2.0) * std::sin(phi / 2.0);
    double total = 0.0;
    for (double tau : taus) total += tau * s / std::sqrt(1.0 - tau * sh2);
    return total;
}

/// Critical current (A) of an explicit channel list; the maximum over phi is
/// located by golden-section search on (0, pi).
inline double critical_current_channels(std::span<const double> taus, double gap_mev,
                                        double rel_tol = 1e-8) {
    const double prefactor = codata.e * units::mev_to_joule(gap_mev) / (2.0 * codata.hbar);
    auto current = [&](double phi) { return channel_sum(taus, phi); };
    auto [phi_max, val] = maximize_golden(current, 1e-9, std::numbers::pi * (1.0 - 1e-12),
                                          rel_tol);
    (void)phi_max;
    return prefactor * val;
}

namespace detail {

// free-electron transverse-mode density m / (2 pi hbar^2), expressed as
// channels per eV of longitudinal energy per nm^2 of junction area
inline double channels_per_ev_nm2() {
    return codata.m_e / (2.0 * std::numbers::pi * codata.hbar * codata.hbar) * codata.e * 1e-18;
}

template <class TauIntegral>
double critical_current_integral(const TauIntegral& k_of_phi, double gap_mev, double rel_tol) {
    const double prefactor = codata.e * units::mev_to_joule(gap_mev) / (2.0 * codata.hbar);
    auto [phi_max, val] =
        maximize_golden(k_of_phi, 1e-9, std::numbers::pi * (1.0 - 1e-12), rel_tol);
    (void)phi_max;
    return prefactor * val;
}

} // namespace detail

} // namespace short_junction

/// E_J/h (GHz) from the short-junction Andreev-bound-state current-phase
/// relation with the same transverse-mode reduction as conductance_density.
/// The low-transparency limit of this expression is exactly the AB result;
/// in the tunneling regime the ratio to ej_uniform sits within O(tau) above 1.
inline double ej_short_junction_uniform(double d_nm, const JunctionParams& p) {
    const double density = short_junction::detail::channels_per_ev_nm2();
    auto k_of_phi = [&](double phi) {
        const double s = std::sin(phi);
        const double sh2 = std::sin(phi / 2.0) * std::sin(phi / 2.0);
        auto integrand = [&](double e_ev) {
            const double tau = barrier_transmission(e_ev, d_nm, p);
            return tau * s / std::sqrt(1.0 - tau * sh2);
        };
        return integrate_adaptive(integrand, 0.0, p.fermi_energy_ev, 1e-10).value * density *
               p.area_nm2();
    };
    const double ic = short_junction::detail::critical_current_integral(k_of_phi, p.gap_mev, 1e-8);
    return units::joule_to_ghz(codata.hbar * ic / (2.0 * codata.e));
}

/// Rough-junction variant; per-pixel energy integrals at each phase. Direct
/// quadrature per pixel, no lookup table: this is the validation surrogate,
/// not the ensemble workhorse.
inline double ej_short_junction(const ThicknessMap& map, const JunctionParams& p) {
    const double density = short_junction::detail::channels_per_ev_nm2();
    const double pixel_area = map.grid.pixel_area_nm2();
    auto k_of_phi = [&](double phi) {
        const double s = std::sin(phi);
        const double sh2 = std::sin(phi / 2.0) * std::sin(phi / 2.0);
        double total = 0.0;
        for (double d : map.values) {
            auto integrand = [&](double e_ev) {
                const double tau = barrier_transmission(e_ev, d, p);
                return tau * s / std::sqrt(1.0 - tau * sh2);
            };
            total += integrate_adaptive(integrand, 0.0, p.fermi_energy_ev, 1e-10).value;
        }
        return total * density * pixel_area;
    };
    const double ic = short_junction::detail::critical_current_integral(k_of_phi, p.gap_mev, 1e-8);
    return units::joule_to_ghz(codata.hbar * ic / (2.0 * codata.e));
}

} // namespace jjvar

#endif // JJVAR_JOSEPHSON_HPP
