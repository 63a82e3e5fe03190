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

#ifndef GKPREP_CLI_TABLE_H
#define GKPREP_CLI_TABLE_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace gkprep::cli {

/// Empty cells (std::monostate) print as "none" in CSV and null in JSON.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// 12 significant digits, printf %.12g.
std::string format_double(double value);

/// Header row followed by one record per row.
void write_csv(const Table &table, std::ostream &out);

/// {"columns": [...], "command": "...", "rows": [[...], ...]} with doubles
/// rounded to 12 significant digits, so that parsing and re-serialising the
/// text with dump_json reproduces it byte for byte.
nlohmann::json to_json(const Table &table);
std::string dump_json(const nlohmann::json &json);

}  // namespace gkprep::cli

#endif
