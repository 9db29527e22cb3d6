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


#ifndef HORNRMT_TOOLS_OUTPUT_HPP
#define HORNRMT_TOOLS_OUTPUT_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hornrmt::cli {

enum class Format { Csv, Json };

/// A table cell: numbers are written with 17 significant digits and unquoted
/// in JSON; text is quoted.
struct Cell {
  std::string text;
  bool numeric = false;

  static Cell number(double v);
  static Cell integer(long long v);
  static Cell string(std::string s);
  static Cell boolean(bool b);
};

struct Document {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Extra top-level values; CSV writes them as "# key: value" lines.
  std::vector<std::pair<std::string, Cell>> fields;
};

struct Meta {
  std::string version;
  std::uint64_t seed = 0;
  std::string args;
};

void write_document(std::ostream& os, Format format, const Meta& meta, const Document& doc);

}  // namespace hornrmt::cli

#endif  // HORNRMT_TOOLS_OUTPUT_HPP
