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

#include "csv.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "ecoroute/error.h"

namespace ecoroute::detail {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(trim(line.substr(start)));
      break;
    }
    out.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::uint64_t parse_u64(std::string_view field, std::size_t line,
                        std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(line, std::string(what) +
                               " is not a nonnegative integer: '" +
                               std::string(field) + "'");
  }
  return value;
}

std::uint32_t parse_count(std::string_view field, std::size_t line,
                          std::string_view what) {
  const auto value = parse_u64(field, line, what);
  if (value > std::numeric_limits<std::uint32_t>::max()) {
    throw ParseError(line, std::string(what) + " out of range: '" +
                               std::string(field) + "'");
  }
  return static_cast<std::uint32_t>(value);
}

double parse_real(std::string_view field, std::size_t line,
                  std::string_view what) {
  double value = 0.0;
  const auto* begin = field.data();
  const auto* end = field.data() + field.size();
  if (!field.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (field.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ParseError(line, std::string(what) + " is not a finite number: '" +
                               std::string(field) + "'");
  }
  return value;
}

CsvReader::CsvReader(std::istream& in, std::string_view expected_header)
    : in_(in) {
  std::string header;
  while (std::getline(in_, header)) {
    ++line_;
    if (!trim(header).empty()) break;
  }
  // Tolerate a UTF-8 byte order mark.
  std::string_view view = header;
  if (view.substr(0, 3) == "\xEF\xBB\xBF") view.remove_prefix(3);
  view = trim(view);
  if (view != expected_header) {
    throw ParseError(line_ == 0 ? 1 : line_,
                     "expected header '" + std::string(expected_header) +
                         "', found '" + std::string(view) + "'");
  }
  columns_ = split_fields(expected_header).size();
}

bool CsvReader::next(std::vector<std::string_view>& fields) {
  while (std::getline(in_, buffer_)) {
    ++line_;
    if (trim(buffer_).empty()) continue;
    fields = split_fields(buffer_);
    if (fields.size() != columns_) {
      throw ParseError(line_, "expected " + std::to_string(columns_) +
                                  " fields, found " +
                                  std::to_string(fields.size()));
    }
    return true;
  }
  return false;
}

std::string fixed(double value, int decimals) {
  // No "-0.000000" in golden outputs.
  if (std::fabs(value) < 0.5 * std::pow(10.0, -decimals)) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

std::string scientific(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*e", decimals, value);
  return buf;
}

}  // namespace ecoroute::detail
