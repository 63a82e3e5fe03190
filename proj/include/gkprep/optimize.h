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

#ifndef GKPREP_OPTIMIZE_H
#define GKPREP_OPTIMIZE_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gkprep {

/// Largest aspect ratio scanned by the optimizer.
inline constexpr double kMaxAspectRatio = 15.0;

struct BiasSearchOptions {
    double r_cap = kMaxAspectRatio;
    /// Spacing of the coarse scan over [1, r_cap].
    double grid_step = 0.01;
    /// Width of the final golden-section bracket.
    double tolerance = 1e-4;
};

struct OptimizationResult {
    std::int64_t n = 1;
    double sigma = 0.0;
    double r_opt = 1.0;
    double error_rate = 0.0;
    double r_cap = kMaxAspectRatio;
    /// More than one strict local minimum was seen on the coarse grid.
    bool multiple_minima = false;
};

/// Minimises logical_error_rate(n, r, sigma) over r in [1, r_cap]: a coarse
/// scan, then golden-section refinement between the neighbours of the best
/// grid point. Ties go to the smaller r.
OptimizationResult optimize_bias(std::int64_t n, double sigma, const BiasSearchOptions &options = {});

/// Noise level at which the optimised n-mode code stops beating the optimised
/// single mode, found by bisection on [sigma_lo, sigma_hi]. Empty when the sign
/// of the difference does not change across the interval. Requires n >= 3.
std::optional<double> crossover_sigma(std::int64_t n, const BiasSearchOptions &options = {}, double sigma_lo = 0.2,
                                      double sigma_hi = 0.7, double tolerance = 1e-5);

struct SweepRow {
    double sigma = 0.0;
    std::int64_t n = 1;
    double r_opt = 1.0;
    double error_rate = 0.0;
    double single_mode_error = 0.0;
    bool beats_single = false;
};

struct SweepResult {
    /// Ordered by sigma, then by position in the n list.
    std::vector<SweepRow> rows;
};

/// Optimised error rate for every (sigma, n) pair, alongside the optimised
/// single-mode baseline at the same sigma. Grid points run on up to `jobs`
/// threads; the result does not depend on `jobs`.
SweepResult sweep(std::span<const double> sigmas, std::span<const std::int64_t> code_lengths,
                  const BiasSearchOptions &options = {}, unsigned jobs = 1);

struct ThresholdEstimate {
    /// Largest sigma on the grid where some code beats the single mode.
    std::optional<double> sigma;
    SweepResult sweep;
};

ThresholdEstimate estimate_threshold(std::span<const double> sigmas, std::span<const std::int64_t> code_lengths,
                                     const BiasSearchOptions &options = {}, unsigned jobs = 1);

/// Optimised error rate and bias versus code length at fixed sigma.
SweepResult scaling_curve(double sigma, std::span<const std::int64_t> code_lengths,
                          const BiasSearchOptions &options = {}, unsigned jobs = 1);

/// Every odd n <= 101, followed by the odd values nearest to `log_points`
/// log-spaced points in [1, max_n].
std::vector<std::int64_t> default_code_lengths(std::int64_t max_n = 10'000'000, int log_points = 60);

}  // namespace gkprep

#endif
