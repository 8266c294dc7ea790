// Copyright 2026 The mbeam Authors
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


#include "mbeam/harness/table.hpp"

#include <cstdio>

#include "mbeam/error.hpp"

#ifndef MBEAM_VERSION
#define MBEAM_VERSION "0.0.0"
#endif

namespace mbeam {
namespace {

std::string printf_double(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, value);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

Cell Cell::empty() { return {"", nullptr}; }
Cell Cell::text(const std::string& value) { return {value, value}; }
Cell Cell::integer(std::int64_t value) { return {std::to_string(value), value}; }
Cell Cell::throughput(double value) { return {printf_double("%.6g", value), value}; }
Cell Cell::correlation(double value) { return {printf_double("%.4f", value), value}; }

Cell Cell::index_set(const std::vector<int>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
  return {s + "}", values};
}

void Table::add_row(std::vector<Cell> row) {
  require(row.size() == columns.size(), "table row has " + std::to_string(row.size()) + " cells, expected " +
                                            std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

std::string artifact_version() { return MBEAM_VERSION; }

void write_csv(std::ostream& out, const Table& table, const nlohmann::json& spec) {
  out << "# mbeam " << artifact_version() << '\n';
  out << "# spec: " << spec.dump() << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i].csv);
    out << '\n';
  }
}

nlohmann::json table_to_json(const Table& table, const nlohmann::json& spec) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[table.columns[i]] = row[i].json;
    rows.push_back(std::move(r));
  }
  return {{"version", artifact_version()}, {"spec", spec}, {"columns", table.columns}, {"rows", std::move(rows)}};
}

}  // namespace mbeam
