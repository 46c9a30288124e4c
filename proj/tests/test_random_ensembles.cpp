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

#include <algorithm>
#include <cstring>

#include "onc/random_ensembles.hpp"
#include "test_util.hpp"

using namespace onc;

namespace {

double ks_statistic(std::vector<double> sample, double (*cdf)(double)) {
    std::sort(sample.begin(), sample.end());
    const double n = double(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max({d, std::abs(f - i / n), std::abs((i + 1) / n - f)});
    }
    return d;
}

double two_sample_ks(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(double(i) / a.size() - double(j) / b.size()));
    }
    return d;
}

}  // namespace

TEST(seeded_stream, identical_identity_identical_bits) {
    SeededStream a(42, 3), b(42, 3);
    const CMatrix ua = haar_unitary(4, a);
    const CMatrix ub = haar_unitary(4, b);
    EXPECT_EQ(0, std::memcmp(ua.data(), ub.data(), sizeof(Complex) * 16));
    SeededStream c(42, 4);
    EXPECT_NE(haar_unitary(4, c)(0, 0), ua(0, 0));
}

TEST(seeded_stream, child_streams_are_deterministic_and_distinct) {
    SeededStream parent(5, 1);
    SeededStream x = parent.child(0), y = parent.child(0), z = parent.child(1);
    const double vx = x.normal();
    EXPECT_EQ(vx, y.normal());
    EXPECT_NE(vx, z.normal());
}

TEST(haar_unitary, is_unitary) {
    SeededStream s(1, 0);
    for (int n = 2; n <= 8; ++n)
        for (int k = 0; k < 20; ++k) EXPECT_TRUE(is_unitary(haar_unitary(n, s)));
}

TEST(haar_unitary, special_unitary_has_unit_determinant) {
    SeededStream s(2, 0);
    for (int n = 2; n <= 5; ++n) {
        const CMatrix u = haar_special_unitary(n, s);
        EXPECT_TRUE(is_unitary(u));
        EXPECT_NEAR(std::abs(Eigen::MatrixXcd(u).determinant() - 1.0), 0.0, 1e-10);
    }
}

TEST(haar_unitary, entry_moments) {
    // E|U_ij|^2 = 1/N with Var = (N-1)/(N^2 (N+1)); E U_ij = 0 with Var(Re) = 1/(2N).
    constexpr int kSamples = 100000;
    for (int n : {2, 3}) {
        SeededStream s(11, static_cast<std::uint64_t>(n));
        RMatrix sq = RMatrix::Zero(n, n);
        CMatrix mean = CMatrix::Zero(n, n);
        for (int k = 0; k < kSamples; ++k) {
            const CMatrix u = haar_unitary(n, s);
            sq += u.cwiseAbs2();
            mean += u;
        }
        sq /= kSamples;
        mean /= double(kSamples);
        const double sigma_sq = std::sqrt((n - 1.0) / (double(n) * n * (n + 1.0)) / kSamples);
        const double sigma_mean = std::sqrt(1.0 / (2.0 * n) / kSamples);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                EXPECT_NEAR(sq(i, j), 1.0 / n, 5 * sigma_sq);
                EXPECT_NEAR(mean(i, j).real(), 0.0, 5 * sigma_mean);
                EXPECT_NEAR(mean(i, j).imag(), 0.0, 5 * sigma_mean);
            }
        }
    }
}

TEST(haar_unitary, left_invariance_two_sample_ks) {
    // Re tr(U) for U and for V U with fixed V: same law under Haar.
    constexpr int kSamples = 100000;
    SeededStream fixed(12, 0);
    const CMatrix v = haar_unitary(3, fixed);
    SeededStream s1(12, 1), s2(12, 2);
    std::vector<double> a, b;
    for (int k = 0; k < kSamples; ++k) {
        a.push_back(haar_unitary(3, s1).trace().real());
        b.push_back((v * haar_unitary(3, s2)).trace().real());
    }
    const double critical = 1.628 * std::sqrt(2.0 / kSamples);  // alpha = 0.01
    EXPECT_LT(two_sample_ks(a, b), critical);
}

TEST(hs_density, valid_states) {
    SeededStream s(13, 0);
    for (int n = 2; n <= 6; ++n) {
        for (int k = 0; k < 50; ++k) {
            const auto rho = hs_density(n, s);
            EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-14);
            EXPECT_GE(eigenvalues_descending(rho.matrix())[n - 1], -1e-14);
        }
    }
}

TEST(hs_density, spectrum_fast_path_matches) {
    SeededStream a(14, 0), b(14, 0);
    for (int k = 0; k < 20; ++k) {
        const auto rho = hs_density(3, a);
        const auto r = hs_spectrum(3, b);
        const auto e = eigenvalues_descending(rho.matrix());
        for (int i = 0; i < 3; ++i) EXPECT_NEAR(r[i], e[i], 1e-14);
    }
}

TEST(hs_density, qubit_gap_follows_t_squared_law) {
    constexpr int kSamples = 200000;
    SeededStream s(15, 0);
    std::vector<double> gaps;
    for (int k = 0; k < kSamples; ++k) {
        const auto r = hs_spectrum(2, s);
        gaps.push_back(r[0] - r[1]);
    }
    const double d = ks_statistic(gaps, [](double t) { return t * t * t; });
    EXPECT_LT(d, 1.95 / std::sqrt(double(kSamples)));  // alpha = 0.001
}

TEST(hs_density, qutrit_inner_disk_fraction) {
    // Mass of r <= 1/(4 sqrt3) under r^7 sin^2(phi) over the whole orbit space,
    // integrated with mpmath at 30 digits.
    constexpr double kExpected = 0.000574028661640965212;
    constexpr int kSamples = 1000000;
    SeededStream s(16, 0);
    int inside = 0;
    for (int k = 0; k < kSamples; ++k) {
        const auto r = hs_spectrum(3, s);
        const double xi3 = std::sqrt(3.0) / 2.0 * (r[0] - r[1]);
        const double xi8 = (1.0 - 3.0 * r[2]) / 2.0;
        if (std::hypot(xi3, xi8) / std::sqrt(3.0) <= 1.0 / (4.0 * std::sqrt(3.0))) ++inside;
    }
    const double p = double(inside) / kSamples;
    EXPECT_NEAR(p, kExpected, 3.0 * std::sqrt(kExpected * (1 - kExpected) / kSamples));
}
