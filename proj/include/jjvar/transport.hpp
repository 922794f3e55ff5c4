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

#ifndef JJVAR_TRANSPORT_HPP
#define JJVAR_TRANSPORT_HPP

#include <cmath>
#include <numbers>
#include <string>

#include "jjvar/constants.hpp"
#include "jjvar/errors.hpp"
#include "jjvar/params.hpp"
#include "jjvar/quadrature.hpp"

namespace jjvar {

/// Characteristic lengths of the free-electron leads and the barrier.
struct LengthScales {
    double k_f_per_nm;    // Fermi wavevector
    double kappa_per_nm;  // barrier decay constant at the Fermi level
    double lambda_f_nm;   // 2 pi / k_F
    double lambda_d_nm;   // 1 / kappa
};

inline LengthScales length_scales(const JunctionParams& p) {
    const double k_f =
        std::sqrt(2.0 * codata.m_e * units::ev_to_joule(p.fermi_energy_ev)) / codata.hbar;
    const double kappa =
        std::sqrt(2.0 * codata.m_e * units::ev_to_joule(p.barrier_height_ev)) / codata.hbar;
    LengthScales s;
    s.k_f_per_nm = units::per_m_to_per_nm(k_f);
    s.kappa_per_nm = units::per_m_to_per_nm(kappa);
    s.lambda_f_nm = 2.0 * std::numbers::pi / s.k_f_per_nm;
    s.lambda_d_nm = 1.0 / s.kappa_per_nm;
    return s;
}

/// Transmission probability of a rectangular barrier of width d whose top
/// sits at E_F + U over the band bottom, at longitudinal energy E_z:
///
///   T = [1 + (k^2+kappa^2)^2 / (4 k^2 kappa^2) * sinh^2(kappa d)]^-1
///
/// with k = sqrt(2m E_z)/hbar and kappa = sqrt(2m (E_F + U - E_z))/hbar.
/// Evaluated through a scaled form that stays finite for kappa d -> 0 and
/// switches to the log-domain asymptote for opaque barriers, where the
/// result cleanly underflows to zero.
inline double barrier_transmission(double e_z_ev, double d_nm, const JunctionParams& p) {
    const double top_ev = p.fermi_energy_ev + p.barrier_height_ev;
    if (!(e_z_ev > 0.0) || e_z_ev > top_ev) {
        throw ComputationError("barrier_transmission: E_z = " + std::to_string(e_z_ev) +
                               " eV outside the supported range (0, E_F + U = " +
                               std::to_string(top_ev) + " eV]");
    }
    if (d_nm < 0.0) {
        throw ComputationError("barrier_transmission: d must be >= 0, got " +
                               std::to_string(d_nm) + " nm");
    }

    const double d = units::nm_to_m(d_nm);
    const double k2 = 2.0 * codata.m_e * units::ev_to_joule(e_z_ev) / (codata.hbar * codata.hbar);
    const double q2 =
        2.0 * codata.m_e * units::ev_to_joule(top_ev - e_z_ev) / (codata.hbar * codata.hbar);
    const double k = std::sqrt(k2);
    const double q = std::sqrt(q2);
    const double qd = q * d;

    if (qd > 350.0) {
        const double log_t =
            std::log(16.0 * k2 * q2 / ((k2 + q2) * (k2 + q2))) - 2.0 * qd;
        return std::exp(log_t); // underflows to exactly 0 for opaque barriers
    }

    // sinh(qd)/q has the finite limit d as q -> 0 (E_z at the barrier top)
    const double sinh_over_q = (qd < 1e-8) ? d * (1.0 + qd * qd / 6.0) : std::sinh(qd) / q;
    const double a = (k2 + q2) / (2.0 * k) * sinh_over_q;
    return 1.0 / (1.0 + a * a);
}

struct ConductanceDensity {
    double g_s_per_nm2 = 0.0;
    bool underflow = false; // integral vanished for a barrier of nonzero width
};

/// Conductance per unit area under the local thickness approximation: the
/// Landauer transverse-mode sum reduced to a longitudinal-energy integral,
///
///   g(d) = (2e^2/h) (m / 2 pi hbar^2) Int_0^{E_F} T(E_z; d) dE_z .
inline ConductanceDensity conductance_density_checked(double d_nm, const JunctionParams& p,
                                                      double rel_tol = 1e-8) {
    if (d_nm < 0.0) {
        throw ComputationError("conductance_density: d must be >= 0, got " +
                               std::to_string(d_nm) + " nm");
    }
    auto integrand = [&](double e_ev) { return barrier_transmission(e_ev, d_nm, p); };
    const QuadratureResult q = integrate_adaptive(integrand, 0.0, p.fermi_energy_ev, rel_tol);

    const double integral_j = q.value * codata.e; // eV integral measure -> J
    const double g_si = (2.0 * codata.e * codata.e / codata.h) *
                        (codata.m_e / (2.0 * std::numbers::pi * codata.hbar * codata.hbar)) *
                        integral_j;

    ConductanceDensity out;
    out.g_s_per_nm2 = units::s_per_m2_to_s_per_nm2(g_si);
    out.underflow = (out.g_s_per_nm2 <= 0.0) && (d_nm > 0.0);
    if (out.underflow) out.g_s_per_nm2 = 0.0;
    return out;
}

inline double conductance_density(double d_nm, const JunctionParams& p, double rel_tol = 1e-8) {
    return conductance_density_checked(d_nm, p, rel_tol).g_s_per_nm2;
}

} // namespace jjvar

#endif // JJVAR_TRANSPORT_HPP
