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


#include "acspin/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "acspin/error.hpp"

namespace acspin {

void CsvTable::set(const std::string& key, const std::string& value) {
  require(key.find_first_of(":\n") == std::string::npos && value.find('\n') == std::string::npos,
          ErrorCode::invalid_argument, "csv config entries must be single-line and keys must not contain ':'");
  for (auto& kv : config)
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  config.emplace_back(key, value);
}

std::string CsvTable::get(const std::string& key) const {
  for (const auto& kv : config)
    if (kv.first == key) return kv.second;
  return {};
}

int CsvTable::column(const std::string& name) const {
  for (std::size_t k = 0; k < columns.size(); ++k)
    if (columns[k] == name) return static_cast<int>(k);
  return -1;
}

void CsvTable::add_row(std::vector<std::string> row) {
  require(row.size() == columns.size(), ErrorCode::dimension_mismatch, "csv row width does not match the header");
  rows.push_back(std::move(row));
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string format_number(long long v) { return std::to_string(v); }

std::string write_csv(const CsvTable& t) {
  require(!t.columns.empty(), ErrorCode::invalid_argument, "csv: no columns");
  std::ostringstream out;
  out << "# schema: " << t.schema << "\n";
  for (const auto& [k, v] : t.config) out << "# " << k << ": " << v << "\n";
  for (std::size_t k = 0; k < t.columns.size(); ++k) out << (k ? "," : "") << t.columns[k];
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      require(row[k].find_first_of(",\n\"") == std::string::npos, ErrorCode::invalid_argument,
              "csv: fields must not contain commas, quotes or newlines");
      out << (k ? "," : "") << row[k];
    }
    out << "\n";
  }
  return out.str();
}

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ls(s);
    while (std::getline(ls, cell, ',')) out.push_back(cell);
    if (!s.empty() && s.back() == ',') out.emplace_back();
    return out;
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto colon = line.find(':');
      require(colon != std::string::npos, ErrorCode::parse, "csv: malformed config line");
      const std::string key = line.substr(2, colon - 2);
      const std::string value = colon + 2 <= line.size() ? line.substr(colon + 2) : std::string();
      if (key == "schema")
        t.schema = value;
      else
        t.config.emplace_back(key, value);
      continue;
    }
    if (t.columns.empty()) {
      t.columns = split(line);
      continue;
    }
    auto row = split(line);
    require(row.size() == t.columns.size(), ErrorCode::parse, "csv: row width does not match the header");
    t.rows.push_back(std::move(row));
  }
  require(!t.columns.empty(), ErrorCode::parse, "csv: missing header");
  return t;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorCode::io, "cannot open " + path + " for writing");
  out << text;
  require(static_cast<bool>(out), ErrorCode::io, "write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace acspin
