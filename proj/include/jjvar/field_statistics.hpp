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

#ifndef JJVAR_FIELD_STATISTICS_HPP
#define JJVAR_FIELD_STATISTICS_HPP

#include <cmath>
#include <vector>

#include "jjvar/errors.hpp"
#include "jjvar/fft2d.hpp"
#include "jjvar/random_field.hpp"

namespace jjvar {

struct RadialAutocovariance {
    std::vector<double> r_nm;
    std::vector<double> c_nm2;
};

struct FieldStatistics {
    double rms_nm = 0.0;
    RadialAutocovariance radial;
};

/// Full circular sample autocovariance C(dx,dy) = <h(r) h(r+d)>_r via the
/// Wiener-Khinchin route (forward FFT, squared magnitudes, inverse FFT).
/// No mean removal: a constant field c gives C == c^2 everywhere.
inline std::vector<double> autocovariance_grid(const HeightField& field) {
    const int nx = field.grid.nx, ny = field.grid.ny;
    const int nxh = nx / 2 + 1;
    const double n = static_cast<double>(field.grid.n_pixels());

    FieldToSpectrum fwd(nx, ny);
    std::copy(field.values.begin(), field.values.end(), fwd.field().begin());
    fwd.execute();

    SpectrumToField inv(nx, ny);
    auto power = inv.spectrum();
    auto spec = fwd.spectrum();
    for (std::size_t i = 0; i < static_cast<std::size_t>(ny) * nxh; ++i) {
        power[i] = std::norm(spec[i]);
    }
    inv.execute();

    std::vector<double> acov(inv.field().begin(), inv.field().end());
    for (double& v : acov) v /= n * n;
    return acov;
}

/// Radially binned autocovariance. Bin width is the coarser pixel pitch;
/// each bin reports the mean lag of the pixels it aggregates, so the first
/// entry is exactly (r = 0, sample second moment).
inline RadialAutocovariance radial_autocovariance(const HeightField& field) {
    const int nx = field.grid.nx, ny = field.grid.ny;
    const double dx = field.grid.dx_nm, dy = field.grid.dy_nm;
    const double w = std::max(dx, dy);
    const double r_max = 0.5 * std::min(field.grid.width_x_nm(), field.grid.width_y_nm());
    const auto acov = autocovariance_grid(field);

    const int n_bins = static_cast<int>(std::floor(r_max / w)) + 1;
    std::vector<double> sum_c(n_bins, 0.0), sum_r(n_bins, 0.0);
    std::vector<long> count(n_bins, 0);

    for (int iy = 0; iy < ny; ++iy) {
        const double ry = std::min(iy, ny - iy) * dy;
        for (int ix = 0; ix < nx; ++ix) {
            const double rx = std::min(ix, nx - ix) * dx;
            const double r = std::hypot(rx, ry);
            if (r > r_max) continue;
            const int b = static_cast<int>(std::floor(r / w + 0.5));
            if (b >= n_bins) continue;
            sum_c[b] += acov[static_cast<std::size_t>(iy) * nx + ix];
            sum_r[b] += r;
            ++count[b];
        }
    }

    RadialAutocovariance out;
    for (int b = 0; b < n_bins; ++b) {
        if (count[b] == 0) continue;
        out.r_nm.push_back(sum_r[b] / count[b]);
        out.c_nm2.push_back(sum_c[b] / count[b]);
    }
    return out;
}

inline FieldStatistics estimate_statistics(const HeightField& field) {
    FieldStatistics stats;
    double s2 = 0.0;
    for (double v : field.values) s2 += v * v;
    stats.rms_nm = std::sqrt(s2 / static_cast<double>(field.values.size()));
    stats.radial = radial_autocovariance(field);
    return stats;
}

/// Correlation length recovered from an estimated autocovariance by a
/// log-linear fit of C(r) against r^2 near the origin (model sigma^2
/// exp(-r^2/xi^2)). Fit window: out to 1.3x the first 1/e crossing.
inline double fit_correlation_length(const RadialAutocovariance& radial) {
    if (radial.c_nm2.empty() || radial.c_nm2.front() <= 0.0) {
        throw ComputationError("fit_correlation_length: autocovariance has no positive C(0)");
    }
    const double c0 = radial.c_nm2.front();
    double r_e = 0.0;
    for (std::size_t i = 1; i < radial.c_nm2.size(); ++i) {
        if (radial.c_nm2[i] < c0 / std::numbers::e) {
            r_e = radial.r_nm[i];
            break;
        }
    }
    if (r_e == 0.0) {
        throw ComputationError("fit_correlation_length: no 1/e crossing within the binned range");
    }

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long n = 0;
    for (std::size_t i = 0; i < radial.c_nm2.size(); ++i) {
        if (radial.r_nm[i] > 1.3 * r_e) break;
        if (radial.c_nm2[i] <= 0.0) continue;
        const double x = radial.r_nm[i] * radial.r_nm[i];
        const double y = std::log(radial.c_nm2[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 3) throw ComputationError("fit_correlation_length: too few usable bins");
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    if (!(slope < 0.0)) {
        throw ComputationError("fit_correlation_length: non-decaying autocovariance");
    }
    return 1.0 / std::sqrt(-slope);
}

} // namespace jjvar

#endif // JJVAR_FIELD_STATISTICS_HPP
