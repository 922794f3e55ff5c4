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

#ifndef JJVAR_QUADRATURE_HPP
#define JJVAR_QUADRATURE_HPP

#include <cmath>
#include <queue>
#include <vector>

#include "jjvar/errors.hpp"

namespace jjvar {

namespace gk15 {

// 15-point Kronrod / 7-point Gauss pair (QUADPACK dqk15 constants).
inline constexpr double nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr double kronrod_weights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr double gauss_weights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

/// One Kronrod panel; returns (K15 estimate, |K15 - G7|).
template <class F>
std::pair<double, double> panel(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - hw * nodes[i]);
        fv[14 - i] = f(c + hw * nodes[i]);
    }
    fv[7] = f(c);

    double kres = kronrod_weights[7] * fv[7];
    double gres = gauss_weights[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kres += kronrod_weights[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) gres += gauss_weights[i / 2] * (fv[i] + fv[14 - i]);
    }
    return {kres * hw, std::fabs((kres - gres) * hw)};
}

} // namespace gk15

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int panels = 0;
};

/// Globally adaptive Gauss-Kronrod integration: the panel with the largest
/// error estimate is bisected until the accumulated error meets rel_tol.
/// Throws ComputationError instead of silently returning a degraded result.
template <class F>
QuadratureResult integrate_adaptive(const F& f, double a, double b, double rel_tol,
                                    int max_panels = 4096) {
    struct Segment {
        double a, b, value, error;
        bool operator<(const Segment& o) const { return error < o.error; }
    };

    auto [v0, e0] = gk15::panel(f, a, b);
    std::priority_queue<Segment> heap;
    heap.push({a, b, v0, e0});
    double total_v = v0, total_e = e0;
    int n = 1;

    while (total_e > rel_tol * std::fabs(total_v) && total_e > 1e-300) {
        if (n >= max_panels) {
            throw ComputationError("quadrature did not converge to relative tolerance " +
                                   std::to_string(rel_tol) + " within " +
                                   std::to_string(max_panels) + " panels");
        }
        const Segment worst = heap.top();
        heap.pop();
        const double m = 0.5 * (worst.a + worst.b);
        auto [vl, el] = gk15::panel(f, worst.a, m);
        auto [vr, er] = gk15::panel(f, m, worst.b);
        total_v += vl + vr - worst.value;
        total_e += el + er - worst.error;
        heap.push({worst.a, m, vl, el});
        heap.push({m, worst.b, vr, er});
        ++n;
    }

    return {total_v, total_e, n};
}

/// Golden-section maximization of a unimodal function on [a, b] to the given
/// relative tolerance on the argument. Returns (argmax, max).
template <class F>
std::pair<double, double> maximize_golden(const F& f, double a, double b, double rel_tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while ((b - a) > rel_tol * (std::fabs(a) + std::fabs(b))) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return (f1 > f2) ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

} // namespace jjvar

#endif // JJVAR_QUADRATURE_HPP
