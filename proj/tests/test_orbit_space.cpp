// Copyright 2026 The onc Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "onc/orbit_space.hpp"
#include "test_util.hpp"

using namespace onc;

namespace {
constexpr double kPi = std::numbers::pi;
const double kS3 = std::sqrt(3.0);

/// Flat-Dirichlet simplex point as a SimplexPoint.
SimplexPoint random_point(int n, SeededStream &s) { return SimplexPoint(onc::testing::random_simplex(n, s)); }
}  // namespace

TEST(simplex_to_xi, examples) {
    auto xi = simplex_to_xi(SimplexPoint(std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3}));
    EXPECT_NEAR(xi.xi3, 0.0, 1e-15);
    EXPECT_NEAR(xi.xi8, 0.0, 1e-15);
    xi = simplex_to_xi(SimplexPoint(std::vector<double>{1.0, 0.0, 0.0}));
    EXPECT_NEAR(xi.xi3, kS3 / 2, 1e-15);
    EXPECT_NEAR(xi.xi8, 0.5, 1e-15);
    xi = simplex_to_xi(SimplexPoint(std::vector<double>{0.5, 0.5, 0.0}));
    EXPECT_NEAR(xi.xi3, 0.0, 1e-15);
    EXPECT_NEAR(xi.xi8, 0.5, 1e-15);
}

TEST(simplex_to_xi, rejects_wrong_dimension) {
    EXPECT_THROW(simplex_to_xi(SimplexPoint(std::vector<double>{0.6, 0.4})), Error);
}

TEST(simplex_point, validates_sum_and_sign) {
    EXPECT_THROW(SimplexPoint(std::vector<double>{0.6, 0.6, 0.0}), Error);
    EXPECT_THROW(SimplexPoint(std::vector<double>{0.7, 0.4, -0.1}), Error);
    const SimplexPoint p(OrderedSpectrum::ascending({0.1, 0.3, 0.6}));
    EXPECT_EQ(p[0], 0.6);
    EXPECT_EQ(p[2], 0.1);
}

TEST(xi_to_polar, examples) {
    auto p = xi_to_polar({0.0, 0.0});
    EXPECT_EQ(p.r(), 0.0);
    EXPECT_EQ(p.phi(), 0.0);
    p = xi_to_polar({kS3 / 2, 0.5});
    EXPECT_NEAR(p.r(), 1 / kS3, 1e-15);
    EXPECT_NEAR(p.phi(), kPi, 1e-14);
    EXPECT_NEAR(p.x(), -1 / kS3, 1e-14);
    EXPECT_NEAR(p.y(), 0.0, 1e-14);
    p = xi_to_polar({0.0, 0.5});
    EXPECT_NEAR(p.r(), 1 / (2 * kS3), 1e-15);
    EXPECT_EQ(p.phi(), 0.0);
}

TEST(xi_to_polar, rejects_points_outside_region) {
    EXPECT_THROW(xi_to_polar({-0.1, 0.3}), Error);
    EXPECT_THROW(xi_to_polar({0.5, 0.1}), Error);
    EXPECT_THROW(xi_to_polar({0.0, 0.6}), Error);
}

TEST(qutrit_orbit_point, domain) {
    EXPECT_THROW(QutritOrbitPoint(-0.1, 1.0), Error);
    EXPECT_THROW(QutritOrbitPoint(0.1, 3.5), Error);
    EXPECT_THROW(QutritOrbitPoint(0.1, -1e-3), Error);
    EXPECT_NO_THROW(QutritOrbitPoint(0.1, kPi));
}

TEST(orbit_space, round_trip_simplex_xi_polar) {
    SeededStream s(7, 0);
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const auto p = random_point(3, s);
        const auto xi = simplex_to_xi(p);
        EXPECT_TRUE(in_xi_region(xi));
        const auto polar = xi_to_polar(xi);
        EXPECT_TRUE(orbit_membership(polar));
        const auto xi2 = polar_to_xi(polar);
        const auto back = polar_to_simplex(polar);
        worst = std::max({worst, std::abs(xi2.xi3 - xi.xi3), std::abs(xi2.xi8 - xi.xi8)});
        for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(back[i] - p[i]));
    }
    EXPECT_LT(worst, 1e-12);
}

TEST(orbit_membership, trisectrix_boundary) {
    for (double phi : {0.0, 0.7, 1.9, kPi}) {
        const double r = 1.0 / (2 * kS3 * std::cos(phi / 3));
        EXPECT_TRUE(orbit_membership({r, phi}));
        EXPECT_FALSE(orbit_membership({r * (1 + 1e-9), phi}));
    }
}

TEST(positive_membership, examples) {
    const QutritOrbitPoint p(0.1, kPi / 2);
    EXPECT_TRUE(positive_membership(p, kPi / 6));
    EXPECT_NEAR(qutrit_lower_bound(p, kPi / 6), 1.0 / 3 - 0.4 / kS3, 1e-15);
    EXPECT_NEAR(qutrit_lower_bound(p, kPi / 6), 0.1024, 1e-4);
    const QutritOrbitPoint pure(1 / kS3, kPi);
    EXPECT_NEAR(qutrit_lower_bound(pure, kPi / 6), (1 - 2 * kS3) / 3, 1e-14);
    for (int k = 0; k <= 20; ++k) EXPECT_FALSE(positive_membership(pure, kPi / 3 * k / 20));
    for (int a = 0; a <= 10; ++a)
        for (int b = 0; b <= 10; ++b)
            EXPECT_TRUE(positive_membership({orbit::kInnerRadius, kPi * a / 10}, kPi / 3 * b / 10));
}

TEST(positive_membership, rejects_bad_zeta) {
    EXPECT_THROW(positive_membership({0.1, 1.0}, -0.01), Error);
    EXPECT_THROW(positive_membership({0.1, 1.0}, kPi / 3 + 0.01), Error);
}

TEST(positive_membership, matches_sign_of_lower_bound) {
    SeededStream s(11, 0);
    for (int k = 0; k < 20000; ++k) {
        const auto p = simplex_to_polar(random_point(3, s));
        const double zeta = s.uniform() * kPi / 3;
        const double w = qutrit_lower_bound(p, zeta);
        if (std::abs(w) < 1e-12) continue;
        EXPECT_EQ(positive_membership(p, zeta), w >= 0.0);
    }
}

TEST(positive_membership, positive_set_inside_orbit_space) {
    SeededStream s(13, 0);
    int positives = 0;
    for (int k = 0; k < 100000; ++k) {
        const QutritOrbitPoint p(s.uniform() * 0.7, s.uniform() * kPi);
        const double zeta = s.uniform() * kPi / 3;
        if (positive_membership(p, zeta)) {
            ++positives;
            ASSERT_TRUE(orbit_membership(p)) << p.r() << ' ' << p.phi() << ' ' << zeta;
        }
    }
    EXPECT_GT(positives, 1000);
}

TEST(positive_membership, single_crossing_along_rays) {
    for (int a = 0; a <= 40; ++a) {
        const double phi = kPi * a / 40;
        const double r_max = 1.0 / (2 * kS3 * std::cos(phi / 3));
        for (int b = 0; b <= 10; ++b) {
            const double zeta = kPi / 3 * b / 10;
            int switches = 0;
            bool prev = true;
            for (int k = 0; k <= 1000; ++k) {
                const bool now = positive_membership({r_max * k / 1000, phi}, zeta);
                if (now != prev) ++switches;
                prev = now;
            }
            EXPECT_LE(switches, 1) << phi << ' ' << zeta;
        }
    }
}

TEST(classify_band, examples) {
    EXPECT_EQ(classify_band({0.1, 1.0}), BandClassification::AlwaysPositive);
    EXPECT_EQ(classify_band({0.35, kPi / 2}), BandClassification::AlwaysNegative);
    EXPECT_EQ(classify_band({0.2, 1.0}), BandClassification::KernelDependent);
    EXPECT_FALSE(orbit_membership({0.35, kPi / 2}));
    EXPECT_STREQ(to_string(BandClassification::KernelDependent), "kernel-dependent");
}

TEST(classify_band, agrees_with_membership_over_zeta_phi_grid) {
    for (double r : {0.05, 0.1, 0.14, 0.16, 0.2, 0.25, 0.28, 0.3, 0.4, 0.5}) {
        for (int a = 0; a <= 9; ++a) {
            const QutritOrbitPoint p(r, kPi * a / 9);
            if (!orbit_membership(p)) continue;
            int positive = 0;
            for (int b = 0; b < 10; ++b)
                for (int c = 0; c < 10; ++c)
                    positive += positive_membership({r, kPi * c / 9}, kPi / 3 * b / 9) ? 1 : 0;
            const auto band = classify_band(p);
            if (band == BandClassification::AlwaysPositive) EXPECT_EQ(positive, 100);
            if (band == BandClassification::AlwaysNegative) EXPECT_EQ(positive, 0);
            if (band == BandClassification::KernelDependent) {
                EXPECT_GT(positive, 0) << r;
                EXPECT_LT(positive, 100) << r;
            }
        }
    }
}

TEST(dual_cone, positive_membership_matches_spectral_lower_bound) {
    SeededStream s(17, 0);
    int checked = 0;
    for (int k = 0; k < 20000; ++k) {
        const auto sp = random_point(3, s);
        const double zeta = s.uniform() * kPi / 3;
        const double w = wigner_bounds(sp.spectrum(), qutrit_kernel_spectrum(zeta)).w_minus;
        if (std::abs(w) < 1e-12) continue;
        ++checked;
        EXPECT_EQ(positive_membership(simplex_to_polar(sp), zeta), w >= 0.0);
        EXPECT_NEAR(qutrit_lower_bound(simplex_to_polar(sp), zeta), w, 1e-12);
    }
    EXPECT_GT(checked, 19000);
}

TEST(hs_density, trivial_zeros) {
    EXPECT_EQ(hs_density_polar({0.0, 1.0}), 0.0);
    EXPECT_NEAR(hs_density_polar({0.3, 0.0}), 0.0, 1e-300);
    EXPECT_NEAR(hs_density_polar({0.3, kPi}), 0.0, 1e-15);
    EXPECT_EQ(hs_density_qubit(0.0), 0.0);
    EXPECT_EQ(hs_density_qubit(0.5), 0.25);
    EXPECT_THROW(hs_density_qubit(1.5), Error);
    EXPECT_THROW(hs_density_simplex(SimplexPoint(std::vector<double>{0.4, 0.3, 0.2, 0.1})), Error);
}

TEST(hs_density, polar_form_proportional_to_vandermonde_times_jacobian) {
    SeededStream s(19, 0);
    double lo = 1e300, hi = 0.0;
    for (int k = 0; k < 100; ++k) {
        const auto sp = random_point(3, s);
        const auto polar = simplex_to_polar(sp);
        const double ratio = hs_density_polar(polar) / (hs_density_simplex(sp) * polar_jacobian(polar.r()));
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    EXPECT_LT((hi - lo) / hi, 1e-8);
}

TEST(hs_density, polar_jacobian_matches_finite_differences) {
    for (double r : {0.05, 0.15, 0.25}) {
        for (double phi : {0.3, 1.5, 2.8}) {
            const double h = 1e-6;
            const auto at = [](double rr, double pp) { return polar_to_simplex({rr, pp}); };
            const auto rp = at(r + h, phi), rm = at(r - h, phi), pp = at(r, phi + h), pm = at(r, phi - h);
            const double d11 = (rp[0] - rm[0]) / (2 * h), d21 = (rp[1] - rm[1]) / (2 * h);
            const double d12 = (pp[0] - pm[0]) / (2 * h), d22 = (pp[1] - pm[1]) / (2 * h);
            EXPECT_NEAR(std::abs(d11 * d22 - d12 * d21), polar_jacobian(r), 1e-8);
        }
    }
}

TEST(positivity_ball_radius, examples) {
    EXPECT_NEAR(positivity_ball_radius(2), 1 / kS3, 1e-15);
    EXPECT_NEAR(positivity_ball_radius(3), 0.25, 1e-15);
    EXPECT_THROW(positivity_ball_radius(1), Error);
}

TEST(positivity_ball_radius, states_inside_have_nonnegative_lower_bound) {
    SeededStream s(23, 0);
    for (int n : {2, 3}) {
        const int d = n * n - 1;
        for (int k = 0; k < 1000; ++k) {
            RVector xi(d);
            for (int a = 0; a < d; ++a) xi[a] = s.normal();
            xi *= positivity_ball_radius(n) * std::pow(s.uniform(), 1.0 / d) / xi.norm();
            const auto rho = from_bloch(BlochVector(n, xi));
            const auto r = eigenvalues_descending(rho.matrix());
            const auto kernel = onc::testing::random_kernel(n, s);
            EXPECT_GE(wigner_bounds(r, kernel).w_minus, 0.0);
        }
    }
}

TEST(boundary_curves, endpoints_and_layout) {
    const int k = 101;
    const auto c = boundary_curves(kPi / 3, k);
    ASSERT_EQ(c.size(), 4u * k);
    EXPECT_EQ(c[0].curve, curve::kOrbitBoundary);
    EXPECT_NEAR(c[0].x, 1 / (2 * kS3), 1e-14);
    EXPECT_NEAR(c[0].y, 0.0, 1e-14);
    EXPECT_EQ(c[k - 1].phi, kPi);
    EXPECT_NEAR(c[k - 1].x, -1 / kS3, 1e-14);
    EXPECT_NEAR(c[k - 1].y, 0.0, 1e-14);
    EXPECT_EQ(c[k].curve, curve::kPositivityBoundary);
    EXPECT_NEAR(c[k].r, 1 / (4 * kS3), 1e-15);
    EXPECT_EQ(c[2 * k].curve, curve::kInnerCircle);
    EXPECT_EQ(c[2 * k].r, orbit::kInnerRadius);
    EXPECT_EQ(c[3 * k].curve, curve::kOuterCircle);
    EXPECT_EQ(c[3 * k].r, orbit::kOuterRadius);
    for (int i = k; i < 2 * k; ++i) EXPECT_NEAR(qutrit_lower_bound({c[i].r, c[i].phi}, kPi / 3), 0.0, 1e-14);
    EXPECT_THROW(boundary_curves(0.0, 1), Error);
}
