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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "jjvar/conductance_table.hpp"
#include "jjvar/transport.hpp"
#include "support/oracles.hpp"

using namespace jjvar;

namespace {

JunctionParams paper_junction() { return {11.7, 1.1, 1.0, 0.2, 200.0, 200.0}; }

} // namespace

TEST_CASE("length scales reproduce the Al / AlOx values") {
    JunctionParams p = paper_junction();

    p.fermi_energy_ev = 11.6;
    const auto s116 = length_scales(p);
    CHECK(s116.lambda_f_nm == doctest::Approx(0.3601).epsilon(1e-3)); // 3.6 A
    CHECK(s116.lambda_d_nm == doctest::Approx(0.1861).epsilon(1e-3)); // 1.9 A

    // identities
    CHECK(s116.lambda_f_nm * s116.k_f_per_nm ==
          doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-12));
    CHECK(s116.lambda_d_nm * s116.kappa_per_nm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("lambda_D halves when U is scaled by four") {
    JunctionParams p = paper_junction();
    const double ld1 = length_scales(p).lambda_d_nm;
    p.barrier_height_ev *= 4.0;
    CHECK(length_scales(p).lambda_d_nm == doctest::Approx(ld1 / 2.0).epsilon(1e-12));
}

TEST_CASE("transmission is exactly 1 at zero width") {
    const JunctionParams p = paper_junction();
    for (double e : {0.5, 3.0, 11.7, 12.5}) CHECK(barrier_transmission(e, 0.0, p) == 1.0);
}

TEST_CASE("transmission matches the tunneling asymptote at kappa*d ~ 5") {
    const JunctionParams p = paper_junction();
    const double d = 1.0;
    const double t = barrier_transmission(p.fermi_energy_ev, d, p);

    const double k = std::sqrt(2.0 * codata.m_e * units::ev_to_joule(p.fermi_energy_ev)) /
                     codata.hbar;
    const double q = std::sqrt(2.0 * codata.m_e * units::ev_to_joule(p.barrier_height_ev)) /
                     codata.hbar;
    const double t_asym = 16.0 * k * k * q * q / std::pow(k * k + q * q, 2) *
                          std::exp(-2.0 * q * units::nm_to_m(d));
    CHECK(t == doctest::Approx(t_asym).epsilon(0.01));
}

TEST_CASE("transmission decreases strictly with width and stays in (0, 1]") {
    const JunctionParams p = paper_junction();
    double prev = 2.0;
    for (double d = 0.0; d <= 3.01; d += 0.1) {
        const double t = barrier_transmission(6.0, d, p);
        CHECK(t > 0.0);
        CHECK(t <= 1.0);
        CHECK(t < prev);
        prev = t;
    }
}

TEST_CASE("transmission domain errors") {
    const JunctionParams p = paper_junction();
    CHECK_THROWS_AS(barrier_transmission(0.0, 1.0, p), ComputationError);
    CHECK_THROWS_AS(barrier_transmission(-1.0, 1.0, p), ComputationError);
    CHECK_THROWS_AS(barrier_transmission(13.0, 1.0, p), ComputationError); // > E_F + U
    CHECK_THROWS_AS(barrier_transmission(6.0, -0.5, p), ComputationError);
    CHECK_THROWS_AS(conductance_density(-0.1, p), ComputationError);
}

TEST_CASE("an opaque barrier underflows to zero with the flag set") {
    JunctionParams p = paper_junction();
    p.barrier_height_ev = 1e6;
    const auto g = conductance_density_checked(1.0, p);
    CHECK(g.g_s_per_nm2 == 0.0);
    CHECK(g.underflow);

    // sane parameters never set the flag
    CHECK_FALSE(conductance_density_checked(1.0, paper_junction()).underflow);
}

TEST_CASE("conductance log-slope: tunneling decay plus the transverse window term") {
    const JunctionParams p = paper_junction();
    const double g10 = conductance_density(1.0, p);
    const double g11 = conductance_density(1.1, p);
    const double slope = (std::log(g11) - std::log(g10)) / 0.1;

    // Frozen from the quadrature itself: -2*kappa = -10.7464/nm from the pure
    // exponential decay, steepened by the 1/d narrowing of the contributing
    // longitudinal-energy window.
    CHECK(slope == doctest::Approx(-11.938).epsilon(0.004));
    const double two_kappa = 2.0 * length_scales(p).kappa_per_nm;
    CHECK(slope < -two_kappa);
}

TEST_CASE("adaptive quadrature matches the fixed-order Gauss-Legendre oracle") {
    std::mt19937_64 gen(505);
    std::uniform_real_distribution<double> ef(5.0, 15.0), u(0.5, 3.0), d(0.5, 2.0);
    for (int i = 0; i < 50; ++i) {
        JunctionParams p{ef(gen), u(gen), 1.0, 0.2, 200.0, 200.0};
        const double dd = d(gen);
        const double g_adaptive = conductance_density(dd, p);
        const double g_oracle = oracles::conductance_density_gl256(dd, p);
        CHECK(g_adaptive == doctest::Approx(g_oracle).epsilon(1e-6));
    }
}

TEST_CASE("conductance table") {
    const JunctionParams p = paper_junction();
    const RoughnessParams rough{0.085, 10.0};
    const auto table = ConductanceTable::build(p, rough, 0.2);

    SUBCASE("covers the required thickness range") {
        const double half = 8.0 * std::numbers::sqrt2 * rough.sigma_nm;
        CHECK(table.d_min() <= std::max(0.2, 1.0 - half));
        CHECK(table.d_max() >= 1.0 + half);
        CHECK(table.d_min() >= 0.2);
    }

    SUBCASE("exactly reproduces the quadrature at the nodes") {
        const auto d = table.thickness_grid();
        for (std::size_t i = 0; i < d.size(); i += 37) {
            CHECK(table.g_s_per_nm2(d[i]) ==
                  doctest::Approx(conductance_density(d[i], p)).epsilon(1e-9));
        }
    }

    SUBCASE("interpolates off-grid within 1e-4 of direct quadrature") {
        std::mt19937_64 gen(17);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        const auto d = table.thickness_grid();
        for (int i = 0; i < 100; ++i) {
            const std::size_t k = gen() % (d.size() - 1);
            const double x = d[k] + (0.1 + 0.8 * u01(gen)) * (d[k + 1] - d[k]);
            CHECK(table.g_s_per_nm2(x) ==
                  doctest::Approx(conductance_density(x, p)).epsilon(1e-4));
        }
    }

    SUBCASE("g is strictly positive, strictly decreasing, log-convex") {
        const auto& g = table.g_values();
        for (std::size_t i = 0; i < g.size(); ++i) CHECK(g[i] > 0.0);
        for (std::size_t i = 0; i + 1 < g.size(); ++i) CHECK(g[i + 1] < g[i]);
        for (std::size_t i = 0; i + 2 < g.size(); ++i) {
            const double d2 = std::log(g[i]) - 2.0 * std::log(g[i + 1]) + std::log(g[i + 2]);
            CHECK(d2 >= -1e-9);
        }
    }

    SUBCASE("queries outside the range throw, never extrapolate") {
        CHECK_THROWS_AS(table.g_s_per_nm2(table.d_min() - 0.01), ComputationError);
        CHECK_THROWS_AS(table.g_s_per_nm2(table.d_max() + 0.01), ComputationError);
        CHECK_NOTHROW(table.g_s_per_nm2(table.d_min()));
        CHECK_NOTHROW(table.g_s_per_nm2(table.d_max()));
    }
}

TEST_CASE("degenerate table at sigma = 0 still answers at the nominal thickness") {
    const JunctionParams p = paper_junction();
    const auto table = ConductanceTable::build(p, RoughnessParams{0.0, 10.0}, 0.2);
    CHECK(table.g_s_per_nm2(1.0) == doctest::Approx(conductance_density(1.0, p)).epsilon(1e-6));
}
