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

#include "discrimkit/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "discrimkit/io.hpp"

namespace discrimkit::io {

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw ValidationError("unknown output format '" + name +
                        "' (expected table, json or csv)");
}

std::string format_sig6(double v) {
  if (std::isinf(v)) return v > 0 ? "infinity" : "-infinity";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string format_full(double v) {
  if (std::isinf(v)) return v > 0 ? "infinity" : "-infinity";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string render_table(const std::vector<Row>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  std::ostringstream out;
  for (const auto& r : rows) {
    out << r.name;
    out << std::string(width - r.name.size() + 2, ' ');
    out << (r.value ? format_sig6(*r.value) : r.text) << '\n';
  }
  return out.str();
}

std::string render_csv(const std::vector<Row>& rows) {
  std::ostringstream out;
  out << "name,value\n";
  for (const auto& r : rows) {
    out << r.name << ',' << (r.value ? format_full(*r.value) : r.text) << '\n';
  }
  return out.str();
}

nlohmann::json json_number(double v) {
  if (std::isinf(v)) {
    return nlohmann::json(v > 0 ? "infinity" : "-infinity");
  }
  return nlohmann::json(v);
}

}  // namespace discrimkit::io
