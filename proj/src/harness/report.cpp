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

#include "tcps/harness/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "json.hpp"

namespace tcps::harness {

namespace {

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) {
        return std::string(s);
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_cell(const Cell &c) {
    return std::visit(
        [](const auto &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return {};
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, double>) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.17g", v);
                return buf;
            } else {
                return csv_field(v);
            }
        },
        c);
}

nlohmann::ordered_json json_cell(const Cell &c) {
    return std::visit(
        [](const auto &v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else {
                return v;
            }
        },
        c);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("Table::add_row: row has " + std::to_string(row.size()) + " cells, expected " +
                               std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
}

std::size_t Table::column(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) {
            return i;
        }
    }
    throw std::out_of_range("Table::column: no column named " + std::string(name));
}

std::string to_csv(const Table &t) {
    std::string out;
    out += "# schema_version=" + std::to_string(kSchemaVersion) + "\n";
    out += "# kind=" + t.kind + "\n";
    out += "# master_seed=" + std::to_string(t.master_seed) + "\n";
    for (const auto &[k, v] : t.config) {
        out += "# config." + k + "=" + v + "\n";
    }
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out += (i ? "," : "") + csv_field(t.columns[i]);
    }
    out += "\n";
    for (const auto &row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += (i ? "," : "") + csv_cell(row[i]);
        }
        out += "\n";
    }
    return out;
}

std::string to_json(const Table &t) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = t.kind;
    j["master_seed"] = t.master_seed;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto &[k, v] : t.config) {
        cfg[k] = v;
    }
    j["config"] = cfg;
    j["columns"] = t.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto &row : t.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto &c : row) {
            r.push_back(json_cell(c));
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string render(const Table &t, ReportFormat format) {
    return format == ReportFormat::kCsv ? to_csv(t) : to_json(t);
}

void emit_report(const Table &t, const std::filesystem::path &path, ReportFormat format) {
    const std::string text = render(t, format);
    if (path.empty()) {
        std::cout << text << std::flush;
        if (!std::cout) {
            throw std::runtime_error("emit_report: failed writing to stdout");
        }
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("emit_report: cannot open " + path.string() + " for writing");
    }
    out << text;
    out.close();
    if (!out) {
        throw std::runtime_error("emit_report: failed writing " + path.string());
    }
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '#') {
            const auto nl = text.find('\n', i);
            i = nl == std::string_view::npos ? text.size() : nl + 1;
            continue;
        }
        std::vector<std::string> rec;
        std::string field;
        bool quoted = false;
        for (; i < text.size(); ++i) {
            const char c = text[i];
            if (quoted) {
                if (c == '"') {
                    if (i + 1 < text.size() && text[i + 1] == '"') {
                        field += '"';
                        ++i;
                    } else {
                        quoted = false;
                    }
                } else {
                    field += c;
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                rec.push_back(std::move(field));
                field.clear();
            } else if (c == '\n') {
                ++i;
                break;
            } else if (c != '\r') {
                field += c;
            }
        }
        rec.push_back(std::move(field));
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace tcps::harness
