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

#ifndef GKPREP_PARALLEL_H
#define GKPREP_PARALLEL_H

#include <cstddef>
#include <functional>

namespace gkprep {

/// Runs body(i) for every i in [0, count) on up to `jobs` threads. Each index
/// runs exactly once; callers write results into slot i, so the outcome does
/// not depend on scheduling. The first exception thrown by any task is
/// rethrown after all workers have joined.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)> &body);

}  // namespace gkprep

#endif
