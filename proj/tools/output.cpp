// Copyright 2026 The macroreal Authors
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


#include "output.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace macroreal::cli {

namespace {

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

nlohmann::ordered_json to_json(const Cell &cell) {
    return std::visit(
        [](const auto &v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                // JSON has no infinities; keep the text form.
                if (!std::isfinite(v)) return format_double(v);
            }
            return v;
        },
        cell);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::logic_error("table row width does not match the header");
    rows.push_back(std::move(row));
}

std::string format_cell(const Cell &cell) {
    return std::visit(
        [](const auto &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_double(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else {
                return std::to_string(v);
            }
        },
        cell);
}

std::string render(const Table &table, const Config &config, const std::string &command, Format format) {
    if (format == Format::json) {
        nlohmann::ordered_json doc;
        auto &cfg = doc["config"];
        cfg = nlohmann::ordered_json::object();
        for (const auto &[k, v] : config) cfg[k] = v;
        auto &res = doc["results"];
        res["columns"] = table.columns;
        res["rows"] = nlohmann::ordered_json::array();
        for (const auto &row : table.rows) {
            nlohmann::ordered_json r = nlohmann::ordered_json::array();
            for (const auto &c : row) r.push_back(to_json(c));
            res["rows"].push_back(r);
        }
        res["summary"] = nlohmann::ordered_json::object();
        for (const auto &[k, v] : table.summary) res["summary"][k] = to_json(v);
        doc["meta"] = {{"program", "macroreal"}, {"version", MACROREAL_VERSION}, {"command", command}};
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "# macroreal " << MACROREAL_VERSION << "\n";
    out << "# command: " << command << "\n";
    for (const auto &[k, v] : config) out << "# config: " << k << "=" << v << "\n";
    for (const auto &[k, v] : table.summary) out << "# summary: " << k << "=" << format_cell(v) << "\n";
    for (size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << csv_field(table.columns[i]);
    out << "\n";
    for (const auto &row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(format_cell(row[i]));
        out << "\n";
    }
    return out.str();
}

void emit(const std::string &text, const std::string &out, const std::string &command, Format format) {
    std::filesystem::path path;
    if (!out.empty()) {
        path = out;
    } else if (const char *dir = std::getenv("MACROREAL_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
        path = std::filesystem::path(dir) / (command + (format == Format::json ? ".json" : ".csv"));
    } else {
        std::cout << text;
        std::cout.flush();
        return;
    }
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream file(path, std::ios::binary);
    file << text;
    if (!file) throw std::runtime_error("cannot write " + path.string());
}

std::string human_summary(const Table &table, const std::string &command) {
    std::ostringstream out;
    out << command << ": " << table.rows.size() << " rows\n";
    for (const auto &[k, v] : table.summary) out << "  " << k << " = " << format_cell(v) << "\n";
    return out.str();
}

}  // namespace macroreal::cli
