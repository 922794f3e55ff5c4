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

#ifndef JJVAR_PARAMS_HPP
#define JJVAR_PARAMS_HPP

#include <cmath>
#include <string>
#include <vector>

#include "jjvar/errors.hpp"

namespace jjvar {

/// Deterministic device parameters. The barrier height U is measured from
/// the Fermi level, so the barrier top sits at E_F + U above the lead band
/// bottom; this convention gives lambda_D = 1/sqrt(2 m U / hbar^2).
struct JunctionParams {
    double fermi_energy_ev;      // E_F, from the lead band bottom
    double barrier_height_ev;    // U, above the Fermi level
    double nominal_thickness_nm; // d
    double gap_mev;              // superconducting gap Delta
    double width_x_nm;           // L_x
    double width_y_nm;           // L_y

    double area_nm2() const { return width_x_nm * width_y_nm; }
};

/// Gaussian random field parameters of one interface.
struct RoughnessParams {
    double sigma_nm; // RMS height
    double xi_nm;    // transverse correlation length
};

/// Discretization of the junction cross section.
struct GridSpec {
    int nx = 0;
    int ny = 0;
    double dx_nm = 0.0;
    double dy_nm = 0.0;

    static GridSpec for_junction(const JunctionParams& j, int nx, int ny) {
        return GridSpec{nx, ny, j.width_x_nm / nx, j.width_y_nm / ny};
    }

    long n_pixels() const { return static_cast<long>(nx) * ny; }
    double pixel_area_nm2() const { return dx_nm * dy_nm; }
    double width_x_nm() const { return nx * dx_nm; }
    double width_y_nm() const { return ny * dy_nm; }

    bool operator==(const GridSpec&) const = default;
};

struct DeviceConfig {
    JunctionParams junction;
    RoughnessParams rough;
    GridSpec grid;
};

namespace detail {

inline void require(std::vector<std::string>& out, bool ok, const std::string& msg) {
    if (!ok) out.push_back(msg);
}

} // namespace detail

/// Checks every type invariant and returns the configuration unchanged.
/// All violations are collected before throwing.
inline DeviceConfig validate(const JunctionParams& junction, const RoughnessParams& rough,
                             const GridSpec& grid) {
    using detail::require;
    std::vector<std::string> v;

    auto positive = [&](double x, const char* name) {
        require(v, std::isfinite(x) && x > 0.0, std::string(name) + " must be > 0, got " +
                                                    std::to_string(x));
    };
    positive(junction.fermi_energy_ev, "fermi_energy_ev");
    positive(junction.barrier_height_ev, "barrier_height_ev");
    positive(junction.nominal_thickness_nm, "nominal_thickness_nm");
    positive(junction.gap_mev, "gap_mev");
    positive(junction.width_x_nm, "width_x_nm");
    positive(junction.width_y_nm, "width_y_nm");

    require(v, junction.gap_mev * 1e-3 < 1e-2 * junction.fermi_energy_ev,
            "gap_mev must satisfy gap << fermi_energy (gap < 1e-2 * E_F), got gap = " +
                std::to_string(junction.gap_mev) + " meV at E_F = " +
                std::to_string(junction.fermi_energy_ev) + " eV");

    require(v, std::isfinite(rough.sigma_nm) && rough.sigma_nm >= 0.0,
            "sigma_nm must be >= 0, got " + std::to_string(rough.sigma_nm));
    require(v, std::isfinite(rough.xi_nm) && rough.xi_nm > 0.0,
            "xi_nm must be > 0, got " + std::to_string(rough.xi_nm));
    require(v, rough.sigma_nm < junction.nominal_thickness_nm / 2.0,
            "sigma_nm must be < nominal_thickness_nm/2 (tunneling regime), got sigma = " +
                std::to_string(rough.sigma_nm) + " nm at d = " +
                std::to_string(junction.nominal_thickness_nm) + " nm");

    require(v, grid.nx >= 1 && grid.ny >= 1, "grid nx, ny must be >= 1");
    require(v, grid.dx_nm > 0.0 && grid.dy_nm > 0.0, "grid dx, dy must be > 0");
    if (grid.nx >= 1 && grid.ny >= 1 && grid.dx_nm > 0.0 && grid.dy_nm > 0.0) {
        require(v, std::fabs(grid.width_x_nm() - junction.width_x_nm) <=
                       1e-12 * junction.width_x_nm,
                "grid must tile the junction: nx*dx = " + std::to_string(grid.width_x_nm()) +
                    " nm != width_x_nm = " + std::to_string(junction.width_x_nm) + " nm");
        require(v, std::fabs(grid.width_y_nm() - junction.width_y_nm) <=
                       1e-12 * junction.width_y_nm,
                "grid must tile the junction: ny*dy = " + std::to_string(grid.width_y_nm()) +
                    " nm != width_y_nm = " + std::to_string(junction.width_y_nm) + " nm");
        require(v, grid.dx_nm <= rough.xi_nm / 5.0,
                "grid resolution: dx = " + std::to_string(grid.dx_nm) +
                    " nm must be <= xi/5 = " + std::to_string(rough.xi_nm / 5.0) + " nm");
        require(v, grid.dy_nm <= rough.xi_nm / 5.0,
                "grid resolution: dy = " + std::to_string(grid.dy_nm) +
                    " nm must be <= xi/5 = " + std::to_string(rough.xi_nm / 5.0) + " nm");
    }

    if (!v.empty()) throw ValidationError(std::move(v));
    return DeviceConfig{junction, rough, grid};
}

} // namespace jjvar

#endif // JJVAR_PARAMS_HPP
