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


#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace mbeam {

/// One table cell, pre-rendered for CSV alongside its JSON value.
struct Cell {
  std::string csv;
  nlohmann::json json;

  static Cell empty();
  static Cell text(const std::string& value);
  static Cell integer(std::int64_t value);
  /// 6 significant digits.
  static Cell throughput(double value);
  /// 4 decimals.
  static Cell correlation(double value);
  /// Integers rendered as {a,b,c} in CSV and an array in JSON.
  static Cell index_set(const std::vector<int>& values);
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Rows whose computation failed numerically; they carry a status message.
  int failed_rows = 0;

  void add_row(std::vector<Cell> row);
};

std::string artifact_version();

/// "# mbeam <version>", "# spec: <compact json>", header row, data rows.
void write_csv(std::ostream& out, const Table& table, const nlohmann::json& spec);

/// {"version", "spec", "columns", "rows": [{column: value}]}.
nlohmann::json table_to_json(const Table& table, const nlohmann::json& spec);

}  // namespace mbeam
