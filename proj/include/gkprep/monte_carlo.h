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

#ifndef GKPREP_MONTE_CARLO_H
#define GKPREP_MONTE_CARLO_H

#include <array>
#include <cstdint>
#include <utility>

#include "gkprep/gkp.h"

namespace gkprep {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_name(Pauli p);

/// Counter-based generator: the stream for trial t depends only on
/// (seed, t), so trials can be simulated in any order or on any thread.
///
/// Pinned algorithm (changing it changes every sampled count):
///  - state_0 = mix(seed ^ mix(t * 0xD1B54A32D192ED03 + 0x8CB92BA72F3D8DD7)),
///    then splitmix64 steps: state += 0x9E3779B97F4A7C15; out = mix(state),
///    where mix is the splitmix64 finaliser;
///  - uniforms are (out >> 11) * 2^-53 in [0, 1);
///  - normals come in pairs from the Marsaglia polar method.
class TrialRng {
   public:
    TrialRng(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t next_u64();
    double uniform();
    /// Two independent standard normal deviates.
    std::pair<double, double> normal_pair();

   private:
    std::uint64_t state_;
};

/// Nearest-lattice-point decision for one quadrature measurement. The
/// remainder modulo the stabiliser spacing T is taken in [-T/2, T/2]; a
/// logical flip is reported iff |remainder| > T/4 (|remainder| = T/4 is
/// treated as no flip).
bool decode_quadrature(double value, double period);

/// Draws one isotropic displacement and corrects it.
Pauli simulate_gkp_mode(const GkpLattice &lattice, double sigma, TrialRng &rng);

struct McConfig {
    std::int64_t n = 1;
    double r = 1.0;
    double sigma = 0.5;
    std::int64_t trials = 1;
    std::uint64_t seed = 0;
};

struct McEstimate {
    std::int64_t trials = 0;
    /// Indexed by Pauli.
    std::array<std::int64_t, 4> counts{};

    double probability(Pauli p) const;
    /// Binomial standard error sqrt(p (1 - p) / trials).
    double standard_error(Pauli p) const;
    /// 1 - P[I].
    double error_rate() const;
    double error_rate_standard_error() const;
};

/// Samples `trials` blocks of n corrected modes, decodes the bit flips by
/// majority vote and the phase flips by parity, and tallies the logical
/// outcome. Counts are identical for any `jobs`.
McEstimate simulate_rep_code(const McConfig &config, unsigned jobs = 1);

}  // namespace gkprep

#endif
