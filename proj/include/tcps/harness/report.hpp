// Copyright 2026 The tcps-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tcps/harness/config.hpp"

namespace tcps::harness {

inline constexpr int kSchemaVersion = 1;

/// Empty cells print as nothing in CSV and null in JSON.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
    std::string kind;
    std::uint64_t master_seed = 0;
    std::map<std::string, std::string> config;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Appends a row; throws if its width differs from columns.
    void add_row(std::vector<Cell> row);
    std::size_t column(std::string_view name) const;
};

/// '#'-prefixed metadata lines (schema_version, kind, master_seed, then
/// config.<key>=<value> in key order), a header row, then the data rows.
/// Doubles use %.17g; strings with a comma, quote or newline are quoted.
std::string to_csv(const Table &table);
/// {"schema_version", "kind", "master_seed", "config", "columns", "rows"}.
std::string to_json(const Table &table);
std::string render(const Table &table, ReportFormat format);

/// Writes to `path`, or to stdout when `path` is empty.
/// Throws std::runtime_error on I/O failure.
void emit_report(const Table &table, const std::filesystem::path &path, ReportFormat format);

/// Splits CSV text into records, skipping '#' lines; handles quoted fields.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace tcps::harness
