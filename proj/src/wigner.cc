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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gkprep/errors.h"

namespace gkprep {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTruncation = 8.0;

void require_aspect_ratio(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw InvalidParameter("aspect ratio must be positive, got " + std::to_string(r));
}

void require_sigma(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidParameter("sigma must be positive, got " + std::to_string(sigma));
}

// Sums of unit Gaussians centred on the even and odd multiples of `spacing`,
// evaluated at each axis point.
struct ParitySums {
    std::vector<double> even;
    std::vector<double> odd;
};

ParitySums comb_by_parity(const std::vector<double> &axis, double spacing, double width) {
    ParitySums sums{std::vector<double>(axis.size(), 0.0), std::vector<double>(axis.size(), 0.0)};
    if (axis.empty()) return sums;
    const auto [lo_it, hi_it] = std::minmax_element(axis.begin(), axis.end());
    const long first = static_cast<long>(std::floor((*lo_it - kTruncation * width) / spacing));
    const long last = static_cast<long>(std::ceil((*hi_it + kTruncation * width) / spacing));
    const double norm = 1.0 / (width * std::sqrt(2.0 * kPi));
    for (long k = first; k <= last; ++k) {
        auto &target = (k % 2 == 0) ? sums.even : sums.odd;
        const double centre = static_cast<double>(k) * spacing;
        for (std::size_t i = 0; i < axis.size(); ++i) {
            const double d = (axis[i] - centre) / width;
            target[i] += norm * std::exp(-0.5 * d * d);
        }
    }
    return sums;
}

// Peaks at (n dq, m dp) with weight (-1)^(nm) / 2, blurred by independent
// Gaussians. Since (-1)^(nm) = -1 only for n and m both odd, the double sum
// factorises into per-axis comb sums.
WignerGrid blur_lattice(double dq, double dp, double width_q, double width_p, const std::vector<double> &q_axis,
                        const std::vector<double> &p_axis) {
    const auto q = comb_by_parity(q_axis, dq, width_q);
    const auto p = comb_by_parity(p_axis, dp, width_p);
    WignerGrid grid{q_axis, p_axis, std::vector<double>(q_axis.size() * p_axis.size())};
    for (std::size_t ip = 0; ip < p_axis.size(); ++ip) {
        const double p_all = p.even[ip] + p.odd[ip];
        for (std::size_t iq = 0; iq < q_axis.size(); ++iq) {
            const double q_all = q.even[iq] + q.odd[iq];
            grid.values[ip * q_axis.size() + iq] = 0.5 * (q_all * p_all - 2.0 * q.odd[iq] * p.odd[ip]);
        }
    }
    return grid;
}

}  // namespace

std::vector<WignerPeak> ideal_peaks(double r, const PhaseSpaceWindow &window) {
    require_aspect_ratio(r);
    if (!(window.q_max >= window.q_min && window.p_max >= window.p_min) || !std::isfinite(window.q_min) ||
        !std::isfinite(window.q_max) || !std::isfinite(window.p_min) || !std::isfinite(window.p_max)) {
        throw InvalidParameter("phase-space window must be finite and non-empty");
    }
    const double dq = std::sqrt(kPi / r);
    const double dp = std::sqrt(kPi * r) / 2.0;
    std::vector<WignerPeak> peaks;
    const auto n_lo = static_cast<long>(std::ceil(window.q_min / dq));
    const auto n_hi = static_cast<long>(std::floor(window.q_max / dq));
    const auto m_lo = static_cast<long>(std::ceil(window.p_min / dp));
    const auto m_hi = static_cast<long>(std::floor(window.p_max / dp));
    for (long m = m_lo; m <= m_hi; ++m) {
        for (long n = n_lo; n <= n_hi; ++n) {
            const double weight = ((n * m) % 2 == 0) ? 0.5 : -0.5;
            peaks.push_back({n, m, n * dq, m * dp, weight});
        }
    }
    return peaks;
}

WignerGrid blurred_grid(double r, double sigma, const std::vector<double> &q_axis, const std::vector<double> &p_axis) {
    require_aspect_ratio(r);
    require_sigma(sigma);
    return blur_lattice(std::sqrt(kPi / r), std::sqrt(kPi * r) / 2.0, sigma, sigma, q_axis, p_axis);
}

WignerGrid biased_blur_square_grid(double r, double sigma, const std::vector<double> &q_axis,
                                   const std::vector<double> &p_axis) {
    require_aspect_ratio(r);
    require_sigma(sigma);
    const double root = std::sqrt(r);
    return blur_lattice(std::sqrt(kPi), std::sqrt(kPi) / 2.0, sigma * root, sigma / root, q_axis, p_axis);
}

double unit_cell_integral(double r, double sigma, std::size_t samples) {
    if (samples == 0) throw InvalidParameter("unit cell integral needs at least one sample per axis");
    const double cell_q = 2.0 * std::sqrt(kPi / r);
    const double cell_p = std::sqrt(kPi * r);
    std::vector<double> q_axis(samples), p_axis(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        q_axis[i] = (static_cast<double>(i) + 0.5) * cell_q / static_cast<double>(samples);
        p_axis[i] = (static_cast<double>(i) + 0.5) * cell_p / static_cast<double>(samples);
    }
    const auto grid = blurred_grid(r, sigma, q_axis, p_axis);
    double sum = 0.0;
    for (double v : grid.values) sum += v;
    return sum * (cell_q / static_cast<double>(samples)) * (cell_p / static_cast<double>(samples));
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = lo;
        return out;
    }
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return out;
}

}  // namespace gkprep
