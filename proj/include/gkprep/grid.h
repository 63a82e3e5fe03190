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

#ifndef GKPREP_GRID_H
#define GKPREP_GRID_H

#include <string>
#include <string_view>
#include <vector>

namespace gkprep {

/// Inclusive arithmetic grid written as "start:stop:step".
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    /// Throws InvalidParameter on malformed text, step <= 0 or stop < start.
    static GridSpec parse(std::string_view text);

    /// start + i * step for every i whose value does not exceed stop (up to a
    /// relative slack of 1e-9 of a step, so that the stated endpoint is kept).
    std::vector<double> values() const;

    std::string to_string() const;
};

}  // namespace gkprep

#endif
