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

#include "gkprep/grid.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "gkprep/errors.h"

namespace gkprep {

namespace {

double parse_number(std::string_view field, std::string_view whole) {
    const std::string s(field);
    char *end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
        throw InvalidParameter("malformed grid '" + std::string(whole) + "', expected start:stop:step");
    }
    return v;
}

}  // namespace

GridSpec GridSpec::parse(std::string_view text) {
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    GridSpec g;
    if (first == std::string_view::npos) {
        // A single value is a one-point grid.
        g.start = g.stop = parse_number(text, text);
        g.step = 1.0;
        return g;
    }
    if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
        throw InvalidParameter("malformed grid '" + std::string(text) + "', expected start:stop:step");
    }
    g.start = parse_number(text.substr(0, first), text);
    g.stop = parse_number(text.substr(first + 1, second - first - 1), text);
    g.step = parse_number(text.substr(second + 1), text);
    if (!(g.step > 0.0)) throw InvalidParameter("grid step must be positive in '" + std::string(text) + "'");
    if (g.stop < g.start) throw InvalidParameter("grid stop precedes start in '" + std::string(text) + "'");
    return g;
}

std::vector<double> GridSpec::values() const {
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
}

std::string GridSpec::to_string() const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g:%.12g:%.12g", start, stop, step);
    return buf;
}

}  // namespace gkprep
