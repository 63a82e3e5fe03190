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

#ifndef GKPREP_GOLDEN_SECTION_H
#define GKPREP_GOLDEN_SECTION_H

#include <cmath>

namespace gkprep {

struct ScalarMinimum {
    double x;
    double value;
};

/// Golden-section search for the minimum of a unimodal `f` on [lo, hi],
/// stopping once the bracket is narrower than `tolerance`. On equal values the
/// left probe wins, so ties resolve toward smaller x.
template <typename F>
ScalarMinimum golden_section_minimize(F &&f, double lo, double hi, double tolerance) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > tolerance) {
        if (fc <= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    return fc <= fd ? ScalarMinimum{c, fc} : ScalarMinimum{d, fd};
}

}  // namespace gkprep

#endif
