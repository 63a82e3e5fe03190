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

#ifndef GKPREP_CLI_DISPATCH_H
#define GKPREP_CLI_DISPATCH_H

#include <iosfwd>
#include <string>
#include <vector>

namespace gkprep::cli {

enum class ExitCode : int {
    ok = 0,
    internal = 1,
    usage = 2,              // unknown flag, missing or malformed argument
    invalid_parameter = 3,  // precondition violated (sigma <= 0, r < 1, ...)
    out_of_range = 4,       // outside supported range (n > 1e7, r_cap > 15)
    even_code_length = 5,
    numerical = 6,  // series failed to converge
    io = 7,
};

/// Runs one command line. `args` excludes the program name. Results go to
/// `out` (or to --out), diagnostics to `err`.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace gkprep::cli

#endif
