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


#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace chordgap_cli {

// Thrown for malformed input files; the CLI maps it to the data exit code.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PointTable {
  std::size_t columns = 0;              // feature columns f0..f{columns-1}
  std::vector<double> values;           // rows x columns, row-major
  std::vector<double> weights;          // empty when no w column
  std::size_t rows() const { return columns ? values.size() / columns : 0; }
};

// Header row of f<i> columns and an optional w column, one point per line.
PointTable read_points_csv(const std::string& path);
PointTable parse_points_csv(const std::string& text);

// Comma-separated list of doubles.
std::vector<double> parse_number_list(const std::string& text);

}  // namespace chordgap_cli
