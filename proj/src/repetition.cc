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

#include "gkprep/repetition.h"

#include <cmath>
#include <string>

#include "gkprep/errors.h"
#include "gkprep/special_functions.h"

namespace gkprep {

namespace {
void require_probability(double p, const char *name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidParameter(std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
    }
}
}  // namespace

RepetitionCode::RepetitionCode(std::int64_t n) : n_(n) {
    if (n < 1) throw InvalidParameter("repetition code length must be >= 1, got " + std::to_string(n));
    if (n > kMaxCodeLength) {
        throw RangeViolation("repetition code length " + std::to_string(n) + " exceeds the supported maximum " +
                             std::to_string(kMaxCodeLength));
    }
    if (n % 2 == 0) throw EvenCodeLength(n);
}

double bitflip_success(const RepetitionCode &code, double p_x) {
    require_probability(p_x, "p_x");
    if (code.length() == 1) return 1.0 - p_x;
    const auto n = static_cast<double>(code.length());
    const auto k = static_cast<double>(code.correctable());
    return reg_incomplete_beta_pair(p_x, k + 1.0, n - k).complement;
}

double bitflip_failure(const RepetitionCode &code, double p_x) {
    require_probability(p_x, "p_x");
    if (code.length() == 1) return p_x;
    const auto n = static_cast<double>(code.length());
    const auto k = static_cast<double>(code.correctable());
    return reg_incomplete_beta_pair(p_x, k + 1.0, n - k).value;
}

double phaseflip_even(const RepetitionCode &code, double p_z) {
    require_probability(p_z, "p_z");
    if (code.length() == 1) return 1.0 - p_z;
    return 0.5 * (1.0 + std::pow(1.0 - 2.0 * p_z, static_cast<double>(code.length())));
}

double phaseflip_odd(const RepetitionCode &code, double p_z) {
    require_probability(p_z, "p_z");
    if (code.length() == 1) return p_z;
    const auto n = static_cast<double>(code.length());
    if (p_z <= 0.5) return -0.5 * std::expm1(n * std::log1p(-2.0 * p_z));
    return 0.5 * (1.0 - std::pow(1.0 - 2.0 * p_z, n));
}

LogicalChannel logical_channel(const RepetitionCode &code, const GkpQubitChannel &gkp) {
    return LogicalChannel(bitflip_failure(code, gkp.bit_flip()), phaseflip_odd(code, gkp.phase_flip()));
}

double logical_error_rate(std::int64_t n, double r, double sigma) {
    const RepetitionCode code(n);
    return logical_channel(code, gkp_channel(GkpLattice(r), NoiseChannel(sigma))).error_rate();
}

}  // namespace gkprep
