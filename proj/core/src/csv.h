/* Copyright 2026 The EcoRoute Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace ecoroute::detail {

std::string_view trim(std::string_view s);

// Splits on commas; no quoting (none of our schemas carry commas in fields).
std::vector<std::string_view> split_fields(std::string_view line);

std::uint32_t parse_count(std::string_view field, std::size_t line,
                          std::string_view what);
std::uint64_t parse_u64(std::string_view field, std::size_t line,
                        std::string_view what);
double parse_real(std::string_view field, std::size_t line,
                  std::string_view what);

// Line-oriented CSV reader with a mandatory header. Blank lines are skipped,
// CR line endings are tolerated, and line numbers are 1-based with the header
// on line 1.
class CsvReader {
 public:
  CsvReader(std::istream& in, std::string_view expected_header);

  // Returns false at end of input. `fields` views into internal storage and
  // stays valid until the next call.
  bool next(std::vector<std::string_view>& fields);
  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t line_ = 0;
  std::size_t columns_ = 0;
};

// Formats with printf-style fixed notation.
std::string fixed(double value, int decimals = 6);
// Formats with printf-style scientific notation.
std::string scientific(double value, int decimals = 6);

}  // namespace ecoroute::detail
