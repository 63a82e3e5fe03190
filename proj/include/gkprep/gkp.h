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

#ifndef GKPREP_GKP_H
#define GKPREP_GKP_H

namespace gkprep {

/// Vacuum quadrature variance in units with hbar = 1.
inline constexpr double kVacuumVariance = 0.5;

/// GKP squeezing s = -10 log10(sigma^2 / sigma_vac^2).
double db_from_sigma(double sigma);
double sigma_from_db(double db);

/// Isotropic Gaussian displacement channel with per-quadrature standard
/// deviation sigma.
class NoiseChannel {
   public:
    explicit NoiseChannel(double sigma);
    static NoiseChannel from_db(double db) { return NoiseChannel(sigma_from_db(db)); }

    double sigma() const { return sigma_; }
    double db() const { return db_from_sigma(sigma_); }

   private:
    double sigma_;
};

/// Rectangular qubit lattice with aspect ratio r >= 1. Stabiliser spacings are
/// 2 sqrt(pi / r) in position and 2 sqrt(pi r) in momentum.
class GkpLattice {
   public:
    explicit GkpLattice(double r);

    double aspect_ratio() const { return r_; }
    double position_period() const { return position_period_; }
    double momentum_period() const { return momentum_period_; }

   private:
    double r_;
    double position_period_;
    double momentum_period_;
};

/// Binary outcome of correcting one quadrature. Only the error probability is
/// stored; the success probability is its complement.
class QuadratureOutcome {
   public:
    explicit QuadratureOutcome(double p_err) : p_err_(p_err) {}

    double p_ok() const { return 1.0 - p_err_; }
    double p_err() const { return p_err_; }

   private:
    double p_err_;
};

struct QuadratureOutcomes {
    QuadratureOutcome q;  // position: logical X error
    QuadratureOutcome p;  // momentum: logical Z error
};

/// Outcome of nearest-lattice-point correction of one quadrature with
/// stabiliser spacing `period` under N(0, sigma^2) displacements.
QuadratureOutcome quadrature_outcome(double sigma, double period);

QuadratureOutcomes quadrature_outcomes(const GkpLattice &lattice, const NoiseChannel &channel);

/// Pauli channel built from independent bit-flip and phase-flip events, so that
/// p_i p_y = p_x p_z holds by construction.
class FactorizedPauliChannel {
   public:
    FactorizedPauliChannel(double bit_flip, double phase_flip) : bit_flip_(bit_flip), phase_flip_(phase_flip) {}

    double p_i() const { return (1.0 - bit_flip_) * (1.0 - phase_flip_); }
    double p_x() const { return bit_flip_ * (1.0 - phase_flip_); }
    double p_y() const { return bit_flip_ * phase_flip_; }
    double p_z() const { return (1.0 - bit_flip_) * phase_flip_; }

    /// Marginal probability of a bit flip, p_x + p_y.
    double bit_flip() const { return bit_flip_; }
    /// Marginal probability of a phase flip, p_z + p_y.
    double phase_flip() const { return phase_flip_; }

    /// 1 - p_i, without cancellation when both flips are rare.
    double error_rate() const { return bit_flip_ + phase_flip_ - bit_flip_ * phase_flip_; }

    bool operator==(const FactorizedPauliChannel &) const = default;

   private:
    double bit_flip_;
    double phase_flip_;
};

/// Effective Pauli channel of one corrected GKP mode.
struct GkpQubitChannel : FactorizedPauliChannel {
    using FactorizedPauliChannel::FactorizedPauliChannel;
};

GkpQubitChannel gkp_channel(const GkpLattice &lattice, const NoiseChannel &channel);

/// Per-quadrature widths of the square-lattice channel that produces the same
/// correction statistics as an isotropic channel on a rectangular lattice.
struct AnisotropicNoise {
    double sigma_q;
    double sigma_p;
};

AnisotropicNoise equivalent_biased_channel(const GkpLattice &lattice, const NoiseChannel &channel);

/// Quadrature outcomes of the square lattice (r = 1) under independent
/// position and momentum widths.
QuadratureOutcomes square_lattice_outcomes(const AnisotropicNoise &noise);

/// Single-Gaussian upper bound on the momentum error rate,
/// erfc((T_p / 4) / (sigma sqrt 2)).
double pz_erfc_approx(const GkpLattice &lattice, const NoiseChannel &channel);

}  // namespace gkprep

#endif
