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

#ifndef JJVAR_RANDOM_FIELD_HPP
#define JJVAR_RANDOM_FIELD_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "jjvar/errors.hpp"
#include "jjvar/fft2d.hpp"
#include "jjvar/params.hpp"
#include "jjvar/rng.hpp"

namespace jjvar {

/// One sampled interface height profile h(x,y), in nm.
struct HeightField {
    GridSpec grid;
    std::vector<double> values; // row-major, values[iy*nx + ix]
    std::uint64_t seed = 0;

    double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * grid.nx + ix]; }

    double mean() const {
        double s = 0.0;
        for (double v : values) s += v;
        return s / static_cast<double>(values.size());
    }
};

/// Per-pixel local barrier thickness, in nm. Strictly positive by
/// construction (clamped at the thickness floor).
struct ThicknessMap {
    GridSpec grid;
    std::vector<double> values;

    double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * grid.nx + ix]; }
};

/// Spectral synthesis of zero-mean Gaussian random fields with autocovariance
///
///     C(r) = sigma^2 exp(-r^2 / xi^2)
///
/// on a periodic grid: Hermitian complex white noise is drawn in Fourier
/// space, weighted by the square root of the spectral density of the Gaussian
/// covariance, and inverse transformed. The per-mode power is normalized over
/// the discrete mode grid, sigma^2 w(k) / sum_k w(k) with
/// w(k) = exp(-xi^2 k^2 / 4), so the ensemble variance of every pixel equals
/// sigma^2 exactly for any xi. For xi <= L/4 the normalization coincides with
/// the continuous density S(k)/A = sigma^2 pi xi^2 exp(-xi^2 k^2/4) / A to
/// machine precision; as xi approaches L the spectrum collapses onto k = 0
/// and a realization degenerates into a single random offset, the correct
/// infinite-correlation limit for a finite junction.
///
/// The k = 0 mode is random like any other, so a single realization has a
/// small nonzero spatial mean with std sigma*sqrt(pi xi^2 / A) (for
/// xi << L), exactly as the covariance dictates for the area average.
class FieldSynthesizer {
  public:
    FieldSynthesizer(const GridSpec& grid, const RoughnessParams& rough)
        : grid_(grid), rough_(rough), fft_(grid.nx, grid.ny) {
        const double min_pitch_xi = 2.0 * std::max(grid.dx_nm, grid.dy_nm);
        if (rough.xi_nm < min_pitch_xi) {
            throw ComputationError(
                "xi = " + std::to_string(rough.xi_nm) + " nm is below 2 pixels (" +
                std::to_string(min_pitch_xi) + " nm); the synthesized field would be white noise");
        }
        const double lmin = std::min(grid.width_x_nm(), grid.width_y_nm());
        wraparound_warning_ = rough.xi_nm > lmin / 4.0;

        build_amplitudes();
    }

    bool wraparound_warning() const { return wraparound_warning_; }

    /// Deterministic: a given (grid, rough, seed) always yields the same
    /// bits. Throws if the realized spatial mean falls outside its 5-sigma
    /// statistical band.
    HeightField sample(std::uint64_t seed) {
        NormalSource rng(seed);
        auto spec = fft_.spectrum();
        const int nx = grid_.nx, ny = grid_.ny;
        const int nxh = nx / 2 + 1;
        constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;

        for (int jy = 0; jy < ny; ++jy) {
            for (int jx = 0; jx < nxh; ++jx) {
                const std::size_t idx = static_cast<std::size_t>(jy) * nxh + jx;
                const double amp = amplitude_[idx];
                const bool edge_col = (jx == 0) || (2 * jx == nx);
                if (edge_col) {
                    const int jym = (ny - jy) % ny;
                    if (jy > jym) {
                        // Hermitian mirror of an already-filled row.
                        spec[idx] = std::conj(spec[static_cast<std::size_t>(jym) * nxh + jx]);
                        continue;
                    }
                    if (jy == jym) { // self-conjugate mode: real coefficient
                        spec[idx] = (amp > 0.0) ? amp * rng.next() : 0.0;
                        continue;
                    }
                }
                if (amp > 0.0) {
                    const double a = rng.next();
                    const double b = rng.next();
                    spec[idx] = std::complex<double>(a * amp * inv_sqrt2, b * amp * inv_sqrt2);
                } else {
                    spec[idx] = 0.0;
                }
            }
        }

        fft_.execute();

        HeightField field;
        field.grid = grid_;
        field.seed = seed;
        field.values.assign(fft_.field().begin(), fft_.field().end());

        check_mean(field);
        return field;
    }

  private:
    void build_amplitudes() {
        const int nx = grid_.nx, ny = grid_.ny;
        const int nxh = nx / 2 + 1;
        const double lx = grid_.width_x_nm();
        const double ly = grid_.width_y_nm();
        const double sigma = rough_.sigma_nm;
        const double xi = rough_.xi_nm;

        // Discrete normalization: per-mode power sigma^2 w(k) / sum_k w(k)
        // with w(k) = exp(-xi^2 k^2 / 4), summed over the full nx x ny mode
        // grid. The total ensemble variance is then sigma^2 exactly, for any
        // xi. For xi <= L/4 the sum equals A / (pi xi^2) to machine
        // precision, recovering the continuous density S(k)/A per mode.
        // w is separable in (kx, ky), so the sum factorizes per axis.
        auto axis_weights = [xi](int n, double length) {
            std::vector<double> w(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) {
                const int m = (j <= n / 2) ? j : j - n;
                const double k = 2.0 * std::numbers::pi * m / length;
                w[static_cast<std::size_t>(j)] = std::exp(-xi * xi * k * k / 4.0);
            }
            return w;
        };
        const std::vector<double> wx = axis_weights(nx, lx);
        const std::vector<double> wy = axis_weights(ny, ly);
        double sum_x = 0.0, sum_y = 0.0;
        for (double w : wx) sum_x += w;
        for (double w : wy) sum_y += w;
        const double total = sum_x * sum_y;

        // Modes with spectral amplitude below 1e-10 of the k=0 amplitude are
        // dropped without consuming random draws; their total contribution to
        // the variance is below 1e-16 relative.
        constexpr double rel_cutoff = 1e-20; // on w = amplitude^2

        amplitude_.assign(static_cast<std::size_t>(ny) * nxh, 0.0);
        if (sigma == 0.0) return;

        for (int jy = 0; jy < ny; ++jy) {
            for (int jx = 0; jx < nxh; ++jx) {
                const double w = wx[static_cast<std::size_t>(jx)] * wy[static_cast<std::size_t>(jy)];
                if (w < rel_cutoff) continue;
                amplitude_[static_cast<std::size_t>(jy) * nxh + jx] =
                    sigma * std::sqrt(w / total);
            }
        }
    }

    void check_mean(const HeightField& field) const {
        const double area = grid_.width_x_nm() * grid_.width_y_nm();
        const double bound = 5.0 * rough_.sigma_nm *
                             std::sqrt(std::numbers::pi * rough_.xi_nm * rough_.xi_nm / area);
        const double m = field.mean();
        if (std::fabs(m) > bound) {
            throw ComputationError("synthesized field mean " + std::to_string(m) +
                                   " nm exceeds the 5-sigma band " + std::to_string(bound) +
                                   " nm (seed " + std::to_string(field.seed) + ")");
        }
        for (double v : field.values) {
            if (!std::isfinite(v))
                throw ComputationError("synthesized field contains non-finite values (seed " +
                                       std::to_string(field.seed) + ")");
        }
    }

    GridSpec grid_;
    RoughnessParams rough_;
    std::vector<double> amplitude_;
    SpectrumToField fft_;
    bool wraparound_warning_ = false;
};

inline HeightField synthesize_field(const GridSpec& grid, const RoughnessParams& rough,
                                    std::uint64_t seed) {
    FieldSynthesizer synth(grid, rough);
    return synth.sample(seed);
}

/// Local barrier thickness: nominal d plus both interface profiles, clamped
/// below at the thickness floor.
inline ThicknessMap thickness_map(double d_nm, const HeightField& top, const HeightField& bottom,
                                  double floor_nm) {
    if (!(top.grid == bottom.grid)) {
        throw ComputationError("thickness_map: top and bottom fields have mismatched grids");
    }
    if (!(floor_nm > 0.0)) {
        throw ComputationError("thickness_map: floor must be > 0, got " +
                               std::to_string(floor_nm));
    }
    ThicknessMap map;
    map.grid = top.grid;
    map.values.resize(top.values.size());
    for (std::size_t i = 0; i < top.values.size(); ++i) {
        map.values[i] = std::max(d_nm + top.values[i] + bottom.values[i], floor_nm);
    }
    return map;
}

/// Pixels that hit the floor clamp (diagnostic; statistically this should be
/// a >= 5-sigma rarity for sane parameters).
inline long count_clamped(const ThicknessMap& map, double floor_nm) {
    long n = 0;
    for (double v : map.values)
        if (v == floor_nm) ++n;
    return n;
}

} // namespace jjvar

#endif // JJVAR_RANDOM_FIELD_HPP
