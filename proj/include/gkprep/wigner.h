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

#ifndef GKPREP_WIGNER_H
#define GKPREP_WIGNER_H

#include <cstddef>
#include <vector>

namespace gkprep {

/// One delta peak of the ideal |0> Wigner function.
struct WignerPeak {
    long n;  // position index, q = n sqrt(pi / r)
    long m;  // momentum index, p = m sqrt(pi r) / 2
    double q;
    double p;
    double weight;  // (-1)^(n m) / 2
};

struct PhaseSpaceWindow {
    double q_min;
    double q_max;
    double p_min;
    double p_max;
};

/// Every peak of the ideal rectangular-lattice |0> state inside `window`
/// (closed on all sides), ordered by m then n.
std::vector<WignerPeak> ideal_peaks(double r, const PhaseSpaceWindow &window);

/// Dense sampled Wigner function. `values` is row-major with one row per
/// momentum sample: values[ip * q_axis.size() + iq].
struct WignerGrid {
    std::vector<double> q_axis;
    std::vector<double> p_axis;
    std::vector<double> values;

    double at(std::size_t iq, std::size_t ip) const { return values[ip * q_axis.size() + iq]; }
};

/// Ideal rectangular |0> state after the isotropic displacement channel:
/// every peak becomes a Gaussian of width sigma. Peaks up to 8 sigma outside
/// the axes' span are included.
WignerGrid blurred_grid(double r, double sigma, const std::vector<double> &q_axis, const std::vector<double> &p_axis);

/// Ideal square-lattice |0> state after an anisotropic channel with widths
/// sigma sqrt(r) in position and sigma / sqrt(r) in momentum.
WignerGrid biased_blur_square_grid(double r, double sigma, const std::vector<double> &q_axis,
                                   const std::vector<double> &p_axis);

/// Midpoint-rule integral of blurred_grid over the unit cell
/// [0, 2 sqrt(pi / r)) x [0, sqrt(pi r)) with `samples` points per axis.
double unit_cell_integral(double r, double sigma, std::size_t samples);

/// `count` evenly spaced points from `lo` to `hi` inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t count);

}  // namespace gkprep

#endif
