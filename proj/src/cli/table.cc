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

#include "gkprep/cli/table.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace gkprep::cli {

namespace {

std::string csv_field(const Cell &cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return "none"; }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string &v) const {
            if (v.find_first_of(",\"\n") == std::string::npos) return v;
            std::string quoted = "\"";
            for (char c : v) {
                if (c == '"') quoted += '"';
                quoted += c;
            }
            return quoted + "\"";
        }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::json json_value(const Cell &cell) {
    struct Visitor {
        nlohmann::json operator()(std::monostate) const { return nullptr; }
        nlohmann::json operator()(double v) const {
            if (!std::isfinite(v)) return nullptr;
            return std::strtod(format_double(v).c_str(), nullptr);
        }
        nlohmann::json operator()(std::int64_t v) const { return v; }
        nlohmann::json operator()(bool v) const { return v; }
        nlohmann::json operator()(const std::string &v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

void write_csv(const Table &table, std::ostream &out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ',';
        out << csv_field(table.columns[i]);
    }
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << csv_field(row[i]);
        }
        out << '\n';
    }
}

nlohmann::json to_json(const Table &table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : table.rows) {
        nlohmann::json record = nlohmann::json::array();
        for (const auto &cell : row) record.push_back(json_value(cell));
        rows.push_back(std::move(record));
    }
    return {{"command", table.command}, {"columns", table.columns}, {"rows", std::move(rows)}};
}

std::string dump_json(const nlohmann::json &json) { return json.dump(2) + "\n"; }

}  // namespace gkprep::cli
