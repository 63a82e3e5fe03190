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

#include "gkprep/optimize.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "gkprep/errors.h"
#include "gkprep/golden_section.h"
#include "gkprep/gkp.h"
#include "gkprep/parallel.h"
#include "gkprep/repetition.h"

namespace gkprep {

namespace {

void validate(const BiasSearchOptions &options) {
    if (!(options.r_cap >= 1.0 && options.r_cap <= kMaxAspectRatio)) {
        throw RangeViolation("r_cap must lie in [1, 15], got " + std::to_string(options.r_cap));
    }
    if (!(options.grid_step > 0.0)) throw InvalidParameter("bias grid step must be positive");
    if (!(options.tolerance > 0.0)) throw InvalidParameter("bias tolerance must be positive");
}

std::vector<double> bias_grid(const BiasSearchOptions &options) {
    std::vector<double> grid;
    const auto steps = static_cast<long>(std::floor((options.r_cap - 1.0) / options.grid_step + 1e-9));
    grid.reserve(static_cast<std::size_t>(steps) + 2);
    for (long i = 0; i <= steps; ++i) grid.push_back(1.0 + static_cast<double>(i) * options.grid_step);
    if (options.r_cap - grid.back() > 1e-12) grid.push_back(options.r_cap);
    grid.back() = std::min(grid.back(), options.r_cap);
    return grid;
}

}  // namespace

OptimizationResult optimize_bias(std::int64_t n, double sigma, const BiasSearchOptions &options) {
    validate(options);
    const RepetitionCode code(n);
    const NoiseChannel channel(sigma);
    auto error_at = [&](double r) { return logical_channel(code, gkp_channel(GkpLattice(r), channel)).error_rate(); };

    const auto grid = bias_grid(options);
    std::vector<double> errors(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) errors[i] = error_at(grid[i]);

    std::size_t best = 0;
    int local_minima = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (errors[i] < errors[best]) best = i;
        const bool below_left = i == 0 || errors[i] < errors[i - 1];
        const bool below_right = i + 1 == grid.size() || errors[i] < errors[i + 1];
        if (below_left && below_right) ++local_minima;
    }

    OptimizationResult result;
    result.n = n;
    result.sigma = sigma;
    result.r_cap = options.r_cap;
    result.r_opt = grid[best];
    result.error_rate = errors[best];
    result.multiple_minima = local_minima > 1;

    const double lo = grid[best == 0 ? 0 : best - 1];
    const double hi = grid[std::min(best + 1, grid.size() - 1)];
    if (hi - lo > options.tolerance) {
        const auto refined = golden_section_minimize(error_at, lo, hi, options.tolerance);
        if (refined.value < result.error_rate) {
            result.r_opt = refined.x;
            result.error_rate = refined.value;
        }
    }
    return result;
}

std::optional<double> crossover_sigma(std::int64_t n, const BiasSearchOptions &options, double sigma_lo,
                                      double sigma_hi, double tolerance) {
    const RepetitionCode code(n);
    if (n < 3) throw InvalidParameter("crossover needs n >= 3, got n=" + std::to_string(n));
    if (!(sigma_lo > 0.0 && sigma_hi > sigma_lo)) throw InvalidParameter("crossover interval must be increasing");
    auto advantage = [&](double sigma) {
        return optimize_bias(n, sigma, options).error_rate - optimize_bias(1, sigma, options).error_rate;
    };
    if (!(advantage(sigma_lo) < 0.0) || advantage(sigma_hi) < 0.0) return std::nullopt;
    while (sigma_hi - sigma_lo > tolerance) {
        const double mid = 0.5 * (sigma_lo + sigma_hi);
        if (advantage(mid) < 0.0) {
            sigma_lo = mid;
        } else {
            sigma_hi = mid;
        }
    }
    return 0.5 * (sigma_lo + sigma_hi);
}

SweepResult sweep(std::span<const double> sigmas, std::span<const std::int64_t> code_lengths,
                  const BiasSearchOptions &options, unsigned jobs) {
    validate(options);
    for (auto n : code_lengths) static_cast<void>(RepetitionCode(n));
    for (auto s : sigmas) static_cast<void>(NoiseChannel(s));

    std::vector<double> single(sigmas.size());
    parallel_for(sigmas.size(), jobs, [&](std::size_t i) { single[i] = optimize_bias(1, sigmas[i], options).error_rate; });

    const std::size_t width = code_lengths.size();
    SweepResult result;
    result.rows.resize(sigmas.size() * width);
    parallel_for(result.rows.size(), jobs, [&](std::size_t idx) {
        const std::size_t i = idx / width;
        const std::size_t j = idx % width;
        const auto opt = optimize_bias(code_lengths[j], sigmas[i], options);
        result.rows[idx] = SweepRow{sigmas[i], code_lengths[j], opt.r_opt, opt.error_rate, single[i],
                                    opt.error_rate < single[i]};
    });
    return result;
}

ThresholdEstimate estimate_threshold(std::span<const double> sigmas, std::span<const std::int64_t> code_lengths,
                                     const BiasSearchOptions &options, unsigned jobs) {
    ThresholdEstimate estimate;
    estimate.sweep = sweep(sigmas, code_lengths, options, jobs);
    for (const auto &row : estimate.sweep.rows) {
        if (row.beats_single && (!estimate.sigma || row.sigma > *estimate.sigma)) estimate.sigma = row.sigma;
    }
    return estimate;
}

SweepResult scaling_curve(double sigma, std::span<const std::int64_t> code_lengths, const BiasSearchOptions &options,
                          unsigned jobs) {
    const double sigmas[] = {sigma};
    return sweep(sigmas, code_lengths, options, jobs);
}

std::vector<std::int64_t> default_code_lengths(std::int64_t max_n, int log_points) {
    if (max_n < 1) throw InvalidParameter("maximum code length must be >= 1");
    if (max_n > kMaxCodeLength) throw RangeViolation("maximum code length exceeds 1e7");
    if (log_points < 2) throw InvalidParameter("need at least two log-spaced points");
    const std::int64_t largest_odd = max_n % 2 ? max_n : max_n - 1;
    std::vector<std::int64_t> out;
    for (std::int64_t n = 1; n <= std::min<std::int64_t>(101, largest_odd); n += 2) out.push_back(n);
    const double top = std::log10(static_cast<double>(max_n));
    for (int i = 0; i < log_points; ++i) {
        const double x = std::pow(10.0, top * i / (log_points - 1));
        auto n = static_cast<std::int64_t>(std::llround(x)) | 1;
        n = std::min(n, largest_odd);
        if (n > 101) out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace gkprep
