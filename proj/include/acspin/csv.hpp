// Copyright 2026 The acspin Authors
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

#include <string>
#include <utility>
#include <vector>

namespace acspin {

/// A CSV document with a '#'-prefixed provenance block:
///   # schema: <schema>
///   # <key>: <value>
///   col,col,...
struct CsvTable {
  std::string schema;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void set(const std::string& key, const std::string& value);
  /// Empty when absent.
  std::string get(const std::string& key) const;
  int column(const std::string& name) const;  // -1 when absent
  void add_row(std::vector<std::string> row);
};

/// Shortest round-trip representation, locale independent.
std::string format_number(double v);
std::string format_number(long long v);

std::string write_csv(const CsvTable& t);
CsvTable parse_csv(const std::string& text);

void write_file(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

}  // namespace acspin
