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

#ifndef GKPREP_ERRORS_H
#define GKPREP_ERRORS_H

#include <stdexcept>
#include <string>

namespace gkprep {

/// A parameter violates an operation's precondition (non-positive sigma,
/// r < 1, probability outside [0, 1], ...).
class InvalidParameter : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Repetition codes are only defined for odd lengths.
class EvenCodeLength : public InvalidParameter {
   public:
    explicit EvenCodeLength(long long n)
        : InvalidParameter("repetition code length must be odd, got n=" + std::to_string(n)) {}
};

/// A parameter is well-formed but outside the supported numerical range
/// (e.g. code length above the 1e7 cutoff).
class RangeViolation : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
};

/// A series or continued fraction failed to converge within its hard term cap.
class SeriesTruncationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace gkprep

#endif
