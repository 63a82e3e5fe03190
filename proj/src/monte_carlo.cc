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

#include "gkprep/monte_carlo.h"

#include <cmath>
#include <string>
#include <vector>

#include "gkprep/errors.h"
#include "gkprep/parallel.h"
#include "gkprep/repetition.h"

namespace gkprep {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct Tally {
    std::array<std::int64_t, 4> counts{};
};

}  // namespace

char pauli_name(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial)
    : state_(mix(seed ^ mix(trial * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull))) {}

std::uint64_t TrialRng::next_u64() {
    state_ += kGolden;
    return mix(state_);
}

double TrialRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1p-53; }

std::pair<double, double> TrialRng::normal_pair() {
    for (;;) {
        const double u = 2.0 * uniform() - 1.0;
        const double v = 2.0 * uniform() - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            const double scale = std::sqrt(-2.0 * std::log(s) / s);
            return {u * scale, v * scale};
        }
    }
}

bool decode_quadrature(double value, double period) {
    if (!(period > 0.0)) throw InvalidParameter("decode_quadrature: period must be positive");
    const double remainder = value - period * std::round(value / period);
    return std::abs(remainder) > period / 4.0;
}

Pauli simulate_gkp_mode(const GkpLattice &lattice, double sigma, TrialRng &rng) {
    const auto [g, h] = rng.normal_pair();
    const bool x = decode_quadrature(sigma * g, lattice.position_period());
    const bool z = decode_quadrature(sigma * h, lattice.momentum_period());
    if (x && z) return Pauli::Y;
    if (x) return Pauli::X;
    if (z) return Pauli::Z;
    return Pauli::I;
}

double McEstimate::probability(Pauli p) const {
    return static_cast<double>(counts[static_cast<std::size_t>(p)]) / static_cast<double>(trials);
}

double McEstimate::standard_error(Pauli p) const {
    const double q = probability(p);
    return std::sqrt(q * (1.0 - q) / static_cast<double>(trials));
}

double McEstimate::error_rate() const {
    return static_cast<double>(trials - counts[0]) / static_cast<double>(trials);
}

double McEstimate::error_rate_standard_error() const {
    const double q = error_rate();
    return std::sqrt(q * (1.0 - q) / static_cast<double>(trials));
}

McEstimate simulate_rep_code(const McConfig &config, unsigned jobs) {
    const RepetitionCode code(config.n);
    const GkpLattice lattice(config.r);
    const NoiseChannel channel(config.sigma);
    if (config.trials < 1) throw InvalidParameter("trials must be >= 1, got " + std::to_string(config.trials));

    const auto trials = static_cast<std::uint64_t>(config.trials);
    const std::uint64_t block = 1u << 14;
    const std::uint64_t blocks = (trials + block - 1) / block;
    std::vector<Tally> tallies(blocks);

    parallel_for(blocks, jobs, [&](std::size_t b) {
        Tally &tally = tallies[b];
        const std::uint64_t end = std::min<std::uint64_t>(trials, (b + 1) * block);
        for (std::uint64_t t = b * block; t < end; ++t) {
            TrialRng rng(config.seed, t);
            std::int64_t bit_flips = 0;
            std::int64_t phase_flips = 0;
            for (std::int64_t mode = 0; mode < code.length(); ++mode) {
                const Pauli p = simulate_gkp_mode(lattice, channel.sigma(), rng);
                bit_flips += p == Pauli::X || p == Pauli::Y;
                phase_flips += p == Pauli::Z || p == Pauli::Y;
            }
            const bool logical_x = bit_flips > code.correctable();
            const bool logical_z = phase_flips % 2 == 1;
            const Pauli outcome = logical_x ? (logical_z ? Pauli::Y : Pauli::X) : (logical_z ? Pauli::Z : Pauli::I);
            ++tally.counts[static_cast<std::size_t>(outcome)];
        }
    });

    McEstimate estimate;
    estimate.trials = config.trials;
    for (const auto &t : tallies) {
        for (std::size_t i = 0; i < 4; ++i) estimate.counts[i] += t.counts[i];
    }
    return estimate;
}

}  // namespace gkprep
