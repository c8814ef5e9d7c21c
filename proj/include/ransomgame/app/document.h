// Copyright 2026 The ransomgame Authors
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

#ifndef RANSOMGAME_APP_DOCUMENT_H_
#define RANSOMGAME_APP_DOCUMENT_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace ransomgame::app {

using Cell = std::variant<double, std::int64_t, std::string>;

// One command's output: a single table plus the configuration that produced
// it. Re-running the command on `config` reproduces the document exactly.
struct Document {
  std::string command;
  nlohmann::json config;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::size_t column(std::string_view name) const;  // throws if absent
  double number(std::size_t row, std::string_view name) const;
  std::string text(std::size_t row, std::string_view name) const;
};

enum class OutputFormat { kCsv, kJson };

std::optional<OutputFormat> parse_output_format(std::string_view name);

// CSV layout:
//   # ransomgame <command>
//   # config: <compact JSON>
//   col1,col2,...
//   rows, floats with 9 significant digits
void write_csv(std::ostream& out, const Document& doc);

// {"command": ..., "config": {...}, "columns": [...], "rows": [[...], ...]}
void write_json(std::ostream& out, const Document& doc);

void write_document(std::ostream& out, const Document& doc, OutputFormat format);

// Recovers the embedded configuration from CSV or JSON output.
nlohmann::json extract_config(std::string_view output);

}  // namespace ransomgame::app

#endif  // RANSOMGAME_APP_DOCUMENT_H_
