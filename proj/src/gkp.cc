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

#include "gkprep/gkp.h"

#include <cmath>
#include <numbers>
#include <string>

#include "gkprep/errors.h"
#include "gkprep/special_functions.h"

namespace gkprep {

namespace {
constexpr double kPi = std::numbers::pi;
}

double db_from_sigma(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw InvalidParameter("sigma must be positive and finite, got " + std::to_string(sigma));
    }
    return -10.0 * std::log10(sigma * sigma / kVacuumVariance);
}

double sigma_from_db(double db) {
    if (!std::isfinite(db)) throw InvalidParameter("squeezing in dB must be finite");
    return std::pow(10.0, -db / 20.0) * std::sqrt(kVacuumVariance);
}

NoiseChannel::NoiseChannel(double sigma) : sigma_(sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw InvalidParameter("sigma must be positive and finite, got " + std::to_string(sigma));
    }
}

GkpLattice::GkpLattice(double r)
    : r_(r), position_period_(2.0 * std::sqrt(kPi / r)), momentum_period_(2.0 * std::sqrt(kPi * r)) {
    if (!(r >= 1.0) || !std::isfinite(r)) {
        throw InvalidParameter("aspect ratio r must be finite and >= 1, got " + std::to_string(r));
    }
}

QuadratureOutcome quadrature_outcome(double sigma, double period) {
    return QuadratureOutcome(outer_bin_mass(sigma, period));
}

QuadratureOutcomes quadrature_outcomes(const GkpLattice &lattice, const NoiseChannel &channel) {
    return {quadrature_outcome(channel.sigma(), lattice.position_period()),
            quadrature_outcome(channel.sigma(), lattice.momentum_period())};
}

GkpQubitChannel gkp_channel(const GkpLattice &lattice, const NoiseChannel &channel) {
    const auto outcomes = quadrature_outcomes(lattice, channel);
    return GkpQubitChannel(outcomes.q.p_err(), outcomes.p.p_err());
}

AnisotropicNoise equivalent_biased_channel(const GkpLattice &lattice, const NoiseChannel &channel) {
    const double root = std::sqrt(lattice.aspect_ratio());
    return {channel.sigma() * root, channel.sigma() / root};
}

QuadratureOutcomes square_lattice_outcomes(const AnisotropicNoise &noise) {
    const GkpLattice square(1.0);
    return {quadrature_outcome(noise.sigma_q, square.position_period()),
            quadrature_outcome(noise.sigma_p, square.momentum_period())};
}

double pz_erfc_approx(const GkpLattice &lattice, const NoiseChannel &channel) {
    return std::erfc(lattice.momentum_period() / 4.0 / (channel.sigma() * std::numbers::sqrt2));
}

}  // namespace gkprep
