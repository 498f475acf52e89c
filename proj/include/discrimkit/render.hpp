// Copyright 2026 The discrimkit developers
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

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace discrimkit::io {

enum class OutputFormat { table, json, csv };

// Accepts "table", "json" or "csv".
OutputFormat parse_format(const std::string& name);

// One (name, value) line of a report. Numeric rows render with 6
// significant digits in tables and full precision in CSV; text rows render
// verbatim.
struct Row {
  Row(std::string n, double v) : name(std::move(n)), value(v) {}
  Row(std::string n, std::string t)
      : name(std::move(n)), text(std::move(t)) {}
  std::string name;
  std::optional<double> value;
  std::string text;
};

std::string format_sig6(double v);
std::string format_full(double v);

std::string render_table(const std::vector<Row>& rows);
std::string render_csv(const std::vector<Row>& rows);

// Numbers JSON cannot carry (infinities) become the string "infinity".
nlohmann::json json_number(double v);

}  // namespace discrimkit::io
