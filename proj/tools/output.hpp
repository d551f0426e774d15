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


#ifndef MACROREAL_TOOLS_OUTPUT_HPP
#define MACROREAL_TOOLS_OUTPUT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace macroreal::cli {

using Cell = std::variant<std::int64_t, double, bool, std::string>;

/// Rows of a result table plus scalar summary values.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, Cell>> summary;

    void add_row(std::vector<Cell> row);
};

enum class Format { csv, json };

/// Option name and its value as given (or its default).
using Config = std::vector<std::pair<std::string, std::string>>;

/// Shortest round-trip text for a cell.
std::string format_cell(const Cell &cell);

std::string render(const Table &table, const Config &config, const std::string &command, Format format);

/// Destination: `out` if set, else $MACROREAL_OUTPUT_DIR/<command>.<ext>,
/// else standard output. Throws std::runtime_error on I/O failure.
void emit(const std::string &text, const std::string &out, const std::string &command, Format format);

/// One line per summary value, for the error stream.
std::string human_summary(const Table &table, const std::string &command);

}  // namespace macroreal::cli

#endif
