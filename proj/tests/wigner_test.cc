// Copyright 2026 The gkprep Authors
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

#include "gkprep/wigner.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "gkprep/errors.h"

using namespace gkprep;

namespace {

constexpr double kPi = std::numbers::pi;

// Direct double sum over |n|, |m| <= 50 of weighted isotropic Gaussians.
double brute_force_wigner(double r, double sigma, double q, double p) {
    const double dq = std::sqrt(kPi / r), dp = std::sqrt(kPi * r) / 2.0;
    double s = 0.0;
    for (int n = -50; n <= 50; ++n) {
        for (int m = -50; m <= 50; ++m) {
            const double w = ((n * m) % 2 == 0) ? 0.5 : -0.5;
            const double a = (q - n * dq) / sigma, b = (p - m * dp) / sigma;
            s += w * std::exp(-0.5 * (a * a + b * b)) / (2.0 * kPi * sigma * sigma);
        }
    }
    return s;
}

double peak_sign(long n, long m) { return ((n * m) % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

TEST(ideal_peaks, weights_and_positions) {
    const auto peaks = ideal_peaks(1.0, {-0.1, 2.0, -0.1, 1.0});
    std::map<std::pair<long, long>, WignerPeak> by_index;
    for (const auto &pk : peaks) by_index[{pk.n, pk.m}] = pk;
    const std::pair<long, long> origin{0, 0}, diagonal{1, 1};
    ASSERT_TRUE(by_index.count(origin));
    EXPECT_EQ(by_index[origin].weight, 0.5);
    ASSERT_TRUE(by_index.count(diagonal));
    EXPECT_DOUBLE_EQ(by_index[diagonal].q, std::sqrt(kPi));
    EXPECT_DOUBLE_EQ(by_index[diagonal].p, std::sqrt(kPi) / 2.0);
    EXPECT_EQ(by_index[diagonal].weight, -0.5);
    EXPECT_EQ(peaks.size(), 4u);
}

TEST(ideal_peaks, rectangular_spacing) {
    const auto peaks = ideal_peaks(4.0, {-3.0, 3.0, -5.0, 5.0});
    for (const auto &pk : peaks) {
        EXPECT_NEAR(pk.q, pk.n * std::sqrt(kPi / 4.0), 1e-15);
        EXPECT_NEAR(pk.p, pk.m * std::sqrt(4.0 * kPi) / 2.0, 1e-15);
        EXPECT_GE(pk.q, -3.0);
        EXPECT_LE(pk.q, 3.0);
        EXPECT_GE(pk.p, -5.0);
        EXPECT_LE(pk.p, 5.0);
    }
    EXPECT_THROW(ideal_peaks(4.0, {1.0, 0.0, 0.0, 1.0}), InvalidParameter);
}

TEST(ideal_peaks, sign_pattern_is_a_bicharacter) {
    // The sign depends on (n mod 2, m mod 2) and is multiplicative in each
    // index separately.
    const auto peaks = ideal_peaks(2.0, {-6.0, 6.0, -6.0, 6.0});
    for (const auto &a : peaks) {
        EXPECT_EQ(a.weight, 0.5 * peak_sign(a.n, a.m));
        EXPECT_EQ(peak_sign(a.n, a.m), peak_sign(a.n % 2, a.m % 2));
        for (const auto &b : peaks) {
            EXPECT_EQ(peak_sign(a.n, a.m) * peak_sign(b.n, a.m), peak_sign(a.n + b.n, a.m));
            EXPECT_EQ(peak_sign(a.n, a.m) * peak_sign(a.n, b.m), peak_sign(a.n, a.m + b.m));
        }
    }
}

TEST(blurred_grid, unit_cell_normalisation) {
    EXPECT_NEAR(unit_cell_integral(2.0, 0.2, 256), 1.0, 1e-6);
    EXPECT_NEAR(unit_cell_integral(1.0, 0.5, 128), 1.0, 1e-10);
    EXPECT_NEAR(unit_cell_integral(4.0, 0.1, 512), 1.0, 1e-10);
}

TEST(blurred_grid, matches_direct_summation) {
    for (double r : {1.0, 2.0, 4.0}) {
        for (double sigma : {0.2, 0.5}) {
            const std::vector<double> q = {0.0, 0.3, -1.1, 2.05};
            const std::vector<double> p = {0.0, -0.7, 1.9};
            const auto grid = blurred_grid(r, sigma, q, p);
            for (std::size_t iq = 0; iq < q.size(); ++iq) {
                for (std::size_t ip = 0; ip < p.size(); ++ip) {
                    EXPECT_NEAR(grid.at(iq, ip), brute_force_wigner(r, sigma, q[iq], p[ip]), 1e-12)
                        << r << " " << sigma << " " << q[iq] << " " << p[ip];
                }
            }
        }
    }
}

TEST(blurred_grid, narrow_peak_height) {
    const double sigma = 0.01;
    const auto grid = blurred_grid(2.0, sigma, {0.0, std::sqrt(kPi / 2.0)}, {0.0, std::sqrt(2.0 * kPi) / 2.0});
    const double height = 1.0 / (2.0 * kPi * sigma * sigma);
    EXPECT_NEAR(grid.at(0, 0) / (0.5 * height), 1.0, 1e-12);
    EXPECT_NEAR(grid.at(1, 1) / (-0.5 * height), 1.0, 1e-12);
}

TEST(blurred_grid, point_reflection_symmetry) {
    const auto axis = linspace(-3.0, 3.0, 61);
    const auto grid = blurred_grid(2.0, 0.3, axis, axis);
    for (std::size_t iq = 0; iq < axis.size(); ++iq) {
        for (std::size_t ip = 0; ip < axis.size(); ++ip) {
            EXPECT_NEAR(grid.at(iq, ip), grid.at(axis.size() - 1 - iq, axis.size() - 1 - ip), 1e-13);
        }
    }
}

TEST(biased_blur_square_grid, unbiased_case_is_isotropic) {
    const auto q = linspace(-2.0, 2.0, 21), p = linspace(-1.5, 1.5, 17);
    const auto a = blurred_grid(1.0, 0.3, q, p);
    const auto b = biased_blur_square_grid(1.0, 0.3, q, p);
    for (std::size_t i = 0; i < a.values.size(); ++i) EXPECT_NEAR(a.values[i], b.values[i], 1e-14);
}

TEST(biased_blur_square_grid, peak_widths) {
    const double sq = 0.2 * std::sqrt(2.0), sp = 0.2 / std::sqrt(2.0);
    EXPECT_NEAR(sq, 0.283, 5e-4);
    EXPECT_NEAR(sp, 0.141, 5e-4);
    // Neighbouring peaks sit about six widths away and shift the ratio by ~1e-6.
    const auto grid = biased_blur_square_grid(2.0, 0.2, {0.0, sq}, {0.0, sp});
    EXPECT_NEAR(grid.at(1, 0) / grid.at(0, 0), std::exp(-0.5), 1e-5);
    EXPECT_NEAR(grid.at(0, 1) / grid.at(0, 0), std::exp(-0.5), 1e-5);
}

TEST(biased_blur_square_grid, squeezing_coordinate_map) {
    const double r = 2.0, sigma = 0.2, root = std::sqrt(r);
    const auto q = linspace(-2.5, 2.5, 41), p = linspace(-2.0, 2.0, 33);
    std::vector<double> q_mapped, p_mapped;
    for (double v : q) q_mapped.push_back(v * root);
    for (double v : p) p_mapped.push_back(v / root);
    const auto rect = blurred_grid(r, sigma, q, p);
    const auto square = biased_blur_square_grid(r, sigma, q_mapped, p_mapped);
    for (std::size_t i = 0; i < rect.values.size(); ++i) {
        EXPECT_NEAR(rect.values[i], square.values[i], 1e-12 * (1.0 + std::abs(rect.values[i])));
    }
}

TEST(blurred_grid, rejects_bad_parameters) {
    EXPECT_THROW(blurred_grid(2.0, 0.0, {0.0}, {0.0}), InvalidParameter);
    EXPECT_THROW(blurred_grid(-1.0, 0.2, {0.0}, {0.0}), InvalidParameter);
    EXPECT_THROW(unit_cell_integral(2.0, 0.2, 0), InvalidParameter);
}
