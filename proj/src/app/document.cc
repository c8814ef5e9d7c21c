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

#include "ransomgame/app/document.h"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "ransomgame/errors.h"
#include "ransomgame/format.h"

namespace ransomgame::app {
namespace {

constexpr std::string_view kConfigPrefix = "# config: ";

std::string csv_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_float(*d);
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

nlohmann::json json_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    if (!std::isfinite(*d)) return nullptr;
    return *d;
  }
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
  return std::get<std::string>(cell);
}

}  // namespace

std::size_t Document::column(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) {
    throw std::out_of_range("document has no column " + std::string(name));
  }
  return static_cast<std::size_t>(it - columns.begin());
}

double Document::number(std::size_t row, std::string_view name) const {
  const Cell& cell = rows.at(row).at(column(name));
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  return static_cast<double>(std::get<std::int64_t>(cell));
}

std::string Document::text(std::size_t row, std::string_view name) const {
  return csv_cell(rows.at(row).at(column(name)));
}

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  return std::nullopt;
}

void write_csv(std::ostream& out, const Document& doc) {
  out << "# ransomgame " << doc.command << '\n';
  out << kConfigPrefix << doc.config.dump() << '\n';
  for (std::size_t c = 0; c < doc.columns.size(); ++c) {
    out << (c ? "," : "") << doc.columns[c];
  }
  out << '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << csv_cell(row[c]);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Document& doc) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : doc.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const Cell& cell : row) r.push_back(json_cell(cell));
    rows.push_back(std::move(r));
  }
  nlohmann::json j;
  j["command"] = doc.command;
  j["config"] = doc.config;
  j["columns"] = doc.columns;
  j["rows"] = std::move(rows);
  out << j.dump() << '\n';
}

void write_document(std::ostream& out, const Document& doc, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    write_json(out, doc);
  } else {
    write_csv(out, doc);
  }
}

nlohmann::json extract_config(std::string_view output) {
  if (output.starts_with("{")) {
    return nlohmann::json::parse(output).at("config");
  }
  const auto start = output.find(kConfigPrefix);
  if (start == std::string_view::npos) {
    throw ConfigError("output carries no embedded config");
  }
  const auto begin = start + kConfigPrefix.size();
  const auto end = output.find('\n', begin);
  return nlohmann::json::parse(output.substr(begin, end - begin));
}

}  // namespace ransomgame::app
