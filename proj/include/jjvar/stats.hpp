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

#ifndef JJVAR_STATS_HPP
#define JJVAR_STATS_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "jjvar/errors.hpp"

namespace jjvar {

/// Maximum-likelihood log-normal fit of an E_J sample plus derived moments.
/// mean_ej/std_ej are the fitted-distribution moments (exact functions of
/// mu_j, sigma_j); raw_mean/raw_std are the plain sample moments. Both are
/// reported since they differ slightly whenever the fit is imperfect.
struct LogNormalFit {
    double mu_j = 0.0;      // mean of log E_J (log-GHz)
    double sigma_j = 0.0;   // population std of log E_J
    double mean_ej_ghz = 0.0;
    double std_ej_ghz = 0.0;
    double raw_mean_ghz = 0.0;
    double raw_std_ghz = 0.0;
    long n = 0;
    double ks_statistic = 0.0; // KS distance of log-samples vs fitted normal
};

/// Log-normal mean and variance from (mu, sigma):
///   E[X] = exp(mu + sigma^2/2),  Var(X) = (exp(sigma^2) - 1) exp(2 mu + sigma^2).
inline std::pair<double, double> lognormal_moments(double mu_j, double sigma_j) {
    if (sigma_j < 0.0) {
        throw ComputationError("lognormal_moments: sigma_j must be >= 0");
    }
    const double s2 = sigma_j * sigma_j;
    const double mean = std::exp(mu_j + s2 / 2.0);
    const double var = (std::exp(s2) - 1.0) * std::exp(2.0 * mu_j + s2);
    return {mean, var};
}

inline double lognormal_pdf(double x, double mu_j, double sigma_j) {
    if (x <= 0.0 || sigma_j <= 0.0) return 0.0;
    const double z = (std::log(x) - mu_j) / sigma_j;
    return std::exp(-0.5 * z * z) / (x * sigma_j * std::sqrt(2.0 * std::numbers::pi));
}

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

inline LogNormalFit fit_lognormal(std::span<const double> samples_ghz) {
    if (samples_ghz.size() < 10) {
        throw ComputationError("fit_lognormal: need at least 10 samples, got " +
                               std::to_string(samples_ghz.size()));
    }
    std::vector<double> logs(samples_ghz.size());
    for (std::size_t i = 0; i < samples_ghz.size(); ++i) {
        if (!(samples_ghz[i] > 0.0)) {
            throw ComputationError("fit_lognormal: non-positive sample at index " +
                                   std::to_string(i));
        }
        logs[i] = std::log(samples_ghz[i]);
    }
    const double n = static_cast<double>(logs.size());

    LogNormalFit fit;
    fit.n = static_cast<long>(logs.size());

    const auto [lmn, lmx] = std::minmax_element(logs.begin(), logs.end());
    if (*lmn == *lmx) { // degenerate sample: point mass, exactly
        fit.mu_j = *lmn;
        fit.sigma_j = 0.0;
    } else {
        double sum = 0.0;
        for (double l : logs) sum += l;
        fit.mu_j = sum / n;
        double ss = 0.0;
        for (double l : logs) ss += (l - fit.mu_j) * (l - fit.mu_j);
        fit.sigma_j = std::sqrt(ss / n); // population convention, fixed for determinism
    }

    auto [mean, var] = lognormal_moments(fit.mu_j, fit.sigma_j);
    fit.mean_ej_ghz = mean;
    fit.std_ej_ghz = std::sqrt(var);

    double rsum = 0.0;
    for (double s : samples_ghz) rsum += s;
    fit.raw_mean_ghz = rsum / n;
    double rss = 0.0;
    for (double s : samples_ghz) rss += (s - fit.raw_mean_ghz) * (s - fit.raw_mean_ghz);
    fit.raw_std_ghz = std::sqrt(rss / n);

    if (fit.sigma_j > 0.0) {
        std::sort(logs.begin(), logs.end());
        double d = 0.0;
        for (std::size_t i = 0; i < logs.size(); ++i) {
            const double cdf = normal_cdf((logs[i] - fit.mu_j) / fit.sigma_j);
            d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - cdf));
            d = std::max(d, std::fabs(cdf - static_cast<double>(i) / n));
        }
        fit.ks_statistic = d;
    }
    return fit;
}

/// Transmon transition frequency and its first-order spread:
///   f01 = sqrt(8 E_C E_J) - E_C,   Delta f01 = sqrt(2 E_C / E_J) Delta E_J,
/// everything expressed as frequency (GHz), the 1/h absorbed by the units.
struct TransmonEstimate {
    double e_c_ghz = 0.0;
    double f01_mean_ghz = 0.0;
    double f01_std_ghz = 0.0;
};

inline TransmonEstimate transmon_frequency(double mean_ej_ghz, double std_ej_ghz,
                                           double e_c_ghz) {
    if (!(e_c_ghz > 0.0)) {
        throw ComputationError("transmon_frequency: E_C must be > 0");
    }
    if (!(mean_ej_ghz > e_c_ghz)) {
        throw ComputationError("transmon_frequency: requires E_J > E_C (transmon regime), got "
                               "E_J = " +
                               std::to_string(mean_ej_ghz) + " GHz, E_C = " +
                               std::to_string(e_c_ghz) + " GHz");
    }
    if (std_ej_ghz < 0.0) {
        throw ComputationError("transmon_frequency: std E_J must be >= 0");
    }
    TransmonEstimate t;
    t.e_c_ghz = e_c_ghz;
    t.f01_mean_ghz = std::sqrt(8.0 * e_c_ghz * mean_ej_ghz) - e_c_ghz;
    t.f01_std_ghz = std::sqrt(2.0 * e_c_ghz / mean_ej_ghz) * std_ej_ghz;
    return t;
}

/// Density-normalized histogram over uniform bins spanning [min, max].
struct Histogram {
    std::vector<double> bin_centers;
    std::vector<double> densities; // integrates to 1
    double bin_width = 0.0;
};

inline Histogram histogram(std::span<const double> samples, int n_bins) {
    if (samples.empty()) {
        throw ComputationError("histogram: empty sample list");
    }
    if (n_bins < 2) {
        throw ComputationError("histogram: need at least 2 bins");
    }
    const auto [mn_it, mx_it] = std::minmax_element(samples.begin(), samples.end());
    double lo = *mn_it, hi = *mx_it;
    if (lo == hi) {
        // degenerate sample: give the bins a nominal unit span around the value
        lo -= 0.5;
        hi += 0.5;
    }
    const double width = (hi - lo) / n_bins;

    Histogram h;
    h.bin_width = width;
    h.bin_centers.resize(n_bins);
    h.densities.assign(n_bins, 0.0);
    for (int b = 0; b < n_bins; ++b) h.bin_centers[b] = lo + (b + 0.5) * width;

    const double weight = 1.0 / (static_cast<double>(samples.size()) * width);
    for (double s : samples) {
        int b = static_cast<int>((s - lo) / width);
        b = std::clamp(b, 0, n_bins - 1); // max sample lands in the last bin
        h.densities[b] += weight;
    }
    return h;
}

/// Sample skewness (population convention).
inline double skewness(std::span<const double> samples) {
    const double n = static_cast<double>(samples.size());
    double mean = 0.0;
    for (double s : samples) mean += s;
    mean /= n;
    double m2 = 0.0, m3 = 0.0;
    for (double s : samples) {
        const double d = s - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;
    return m3 / std::pow(m2, 1.5);
}

} // namespace jjvar

#endif // JJVAR_STATS_HPP
