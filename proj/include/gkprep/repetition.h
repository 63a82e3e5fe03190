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

#ifndef GKPREP_REPETITION_H
#define GKPREP_REPETITION_H

#include <cstdint>

#include "gkprep/gkp.h"

namespace gkprep {

/// Largest supported code length.
inline constexpr std::int64_t kMaxCodeLength = 10'000'000;

/// Bit-flip repetition code on n (odd) data modes, decoded by majority vote.
class RepetitionCode {
   public:
    /// Throws EvenCodeLength for even n, InvalidParameter for n < 1 and
    /// RangeViolation for n > kMaxCodeLength.
    explicit RepetitionCode(std::int64_t n);

    std::int64_t length() const { return n_; }
    /// Number of correctable bit flips, (n - 1) / 2.
    std::int64_t correctable() const { return (n_ - 1) / 2; }

   private:
    std::int64_t n_;
};

/// Pr(at most k of n modes flipped) = I_{1-p}(n - k, k + 1).
double bitflip_success(const RepetitionCode &code, double p_x);
/// Complement of bitflip_success, accurate when small.
double bitflip_failure(const RepetitionCode &code, double p_x);

/// Pr(even number of phase flips) = (1 + (1 - 2 p_z)^n) / 2.
double phaseflip_even(const RepetitionCode &code, double p_z);
/// Pr(odd number of phase flips), via expm1/log1p for p_z <= 1/2.
double phaseflip_odd(const RepetitionCode &code, double p_z);

/// Logical Pauli channel of the concatenated code.
struct LogicalChannel : FactorizedPauliChannel {
    using FactorizedPauliChannel::FactorizedPauliChannel;
};

/// Feeds the per-mode bit-flip and phase-flip marginals of `gkp` through the
/// majority vote and the phase parity.
LogicalChannel logical_channel(const RepetitionCode &code, const GkpQubitChannel &gkp);

/// 1 - P[I_L] for n modes of a rectangular lattice with aspect ratio r under
/// isotropic noise of width sigma.
double logical_error_rate(std::int64_t n, double r, double sigma);

}  // namespace gkprep

#endif
