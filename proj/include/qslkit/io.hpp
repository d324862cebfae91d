// Copyright 2026 The qslkit Authors
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
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qslkit::io {

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

/// Empty string for undefined values; CSV never carries "nan".
std::string format_optional(const std::optional<double>& v);

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields);

/// Minimal CSV reader for files this library writes (no quoting).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(std::string_view name) const;
  std::optional<double> value(std::size_t row, std::string_view name) const;
};

CsvTable read_csv(const std::string& path);

}  // namespace qslkit::io
