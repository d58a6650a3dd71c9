// Copyright 2026 The chordgap Authors
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


#include "csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace chordgap_cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

bool parse_double(const std::string& s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && first != last;
}

}  // namespace

PointTable parse_points_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty CSV: missing header row");
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);

  const std::vector<std::string> header = split(line);
  PointTable table;
  std::ptrdiff_t weight_col = -1;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == "w") {
      if (weight_col >= 0) throw InputError("header: duplicate w column");
      weight_col = static_cast<std::ptrdiff_t>(c);
    } else if (header[c] == "f" + std::to_string(table.columns)) {
      ++table.columns;
    } else {
      throw InputError("header: unexpected column '" + header[c] + "' (expected f" +
                       std::to_string(table.columns) + " or w)");
    }
  }
  if (table.columns == 0) throw InputError("header: no feature columns");

  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    ++row;
    const std::vector<std::string> cells = split(line);
    if (cells.size() != header.size()) {
      throw InputError("row " + std::to_string(row) + ": expected " +
                       std::to_string(header.size()) + " cells, got " +
                       std::to_string(cells.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      double v = 0.0;
      if (!parse_double(cells[c], v)) {
        throw InputError("row " + std::to_string(row) + ": non-numeric cell '" + cells[c] + "'");
      }
      if (static_cast<std::ptrdiff_t>(c) == weight_col) {
        if (!(v > 0.0) || !std::isfinite(v)) {
          throw InputError("row " + std::to_string(row) + ": weight must be positive");
        }
        table.weights.push_back(v);
      } else {
        table.values.push_back(v);
      }
    }
  }
  if (row == 0) throw InputError("CSV has no data rows");
  return table;
}

PointTable read_points_csv(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_points_csv(buf.str());
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& cell : split(text)) {
    double v = 0.0;
    if (!parse_double(cell, v)) throw std::invalid_argument("not a number: '" + cell + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty number list");
  return out;
}

}  // namespace chordgap_cli
