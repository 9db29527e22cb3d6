// Copyright 2026 The hornrmt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "output.hpp"

#include <cmath>

#include "hornrmt/function_table.hpp"

namespace hornrmt::cli {

Cell Cell::number(double v) {
  if (!std::isfinite(v)) return {std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf"), false};
  return {format_double(v), true};
}

Cell Cell::integer(long long v) { return {std::to_string(v), true}; }

Cell Cell::string(std::string s) { return {std::move(s), false}; }

Cell Cell::boolean(bool b) { return {b ? "true" : "false", true}; }

namespace {

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string json_cell(const Cell& c) { return c.numeric ? c.text : json_quote(c.text); }

std::string csv_cell(const Cell& c) {
  if (c.numeric || c.text.find_first_of(",\"\n") == std::string::npos) return c.text;
  std::string out = "\"";
  for (char ch : c.text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void write_document(std::ostream& os, Format format, const Meta& meta, const Document& doc) {
  if (format == Format::Csv) {
    os << "# generated-by hornrmt, version " << meta.version << ", seed " << meta.seed
       << ", args " << meta.args << "\n";
    for (const auto& [key, value] : doc.fields) os << "# " << key << ": " << value.text << "\n";
    for (std::size_t k = 0; k < doc.columns.size(); ++k)
      os << (k ? "," : "") << doc.columns[k];
    os << "\n";
    for (const auto& row : doc.rows) {
      for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_cell(row[k]);
      os << "\n";
    }
    return;
  }
  os << "{\"meta\":{\"generated_by\":\"hornrmt\",\"version\":" << json_quote(meta.version)
     << ",\"seed\":" << meta.seed << ",\"args\":" << json_quote(meta.args) << "}";
  for (const auto& [key, value] : doc.fields) os << "," << json_quote(key) << ":" << json_cell(value);
  os << ",\"columns\":[";
  for (std::size_t k = 0; k < doc.columns.size(); ++k)
    os << (k ? "," : "") << json_quote(doc.columns[k]);
  os << "],\"rows\":[";
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    os << (r ? "," : "") << "[";
    for (std::size_t k = 0; k < doc.rows[r].size(); ++k)
      os << (k ? "," : "") << json_cell(doc.rows[r][k]);
    os << "]";
  }
  os << "]}\n";
}

}  // namespace hornrmt::cli
