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

#include "ecoroute/profiles.h"

#include <cstdio>
#include <string>
#include <string_view>

#include "csv.h"
#include "ecoroute/error.h"

namespace ecoroute {
namespace {

struct PendingProfile {
  ModelProfile profile;
  std::size_t line = 0;
  bool has_name = false;
  bool has_accuracy = false;
  bool has_alpha = false;
  bool has_beta = false;
};

std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::string parse_string(std::string_view value, std::size_t line) {
  if (value.size() < 2 || value.front() != '"' || value.back() != '"') {
    throw ParseError(line, "expected a quoted string, found '" +
                               std::string(value) + "'");
  }
  return std::string(value.substr(1, value.size() - 2));
}

TokenCoeffs parse_triple(std::string_view value, std::size_t line,
                         std::string_view key) {
  if (value.size() < 2 || value.front() != '[' || value.back() != ']') {
    throw ParseError(line, std::string(key) + " must be a list [c0, c1, c2]");
  }
  const auto fields = detail::split_fields(value.substr(1, value.size() - 2));
  if (fields.size() != 3) {
    throw ParseError(line, std::string(key) + " needs exactly 3 coefficients");
  }
  TokenCoeffs out{};
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = detail::parse_real(fields[i], line, key);
  }
  return out;
}

void finish(PendingProfile& pending, Fleet& fleet) {
  const char* missing = !pending.has_name       ? "name"
                        : !pending.has_accuracy ? "accuracy_const"
                        : !pending.has_alpha    ? "alpha"
                        : !pending.has_beta     ? "beta"
                                                : nullptr;
  if (missing != nullptr) {
    throw ParseError(pending.line, std::string("model block is missing '") +
                                       missing + "'");
  }
  fleet.push_back(std::move(pending.profile));
}

}  // namespace

Fleet parse_profiles(std::istream& in) {
  Fleet fleet;
  std::optional<PendingProfile> pending;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = detail::trim(strip_comment(raw));
    if (text.empty()) continue;
    if (text == "[[model]]") {
      if (pending) finish(*pending, fleet);
      pending.emplace();
      pending->line = line;
      continue;
    }
    if (text.front() == '[') {
      throw ParseError(line, "unknown section '" + std::string(text) + "'");
    }
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line, "expected 'key = value'");
    }
    if (!pending) {
      throw ParseError(line, "key outside of a [[model]] block");
    }
    const auto key = detail::trim(text.substr(0, eq));
    const auto value = detail::trim(text.substr(eq + 1));
    auto& p = *pending;
    if (key == "name") {
      p.profile.name = parse_string(value, line);
      p.has_name = true;
    } else if (key == "accuracy_const") {
      p.profile.accuracy_const = detail::parse_real(value, line, key);
      p.has_accuracy = true;
    } else if (key == "alpha") {
      p.profile.energy_coeffs = parse_triple(value, line, key);
      p.has_alpha = true;
    } else if (key == "beta") {
      p.profile.runtime_coeffs = parse_triple(value, line, key);
      p.has_beta = true;
    } else if (key == "gamma") {
      p.profile.capacity_fraction = detail::parse_real(value, line, key);
    } else {
      throw ParseError(line, "unknown key '" + std::string(key) + "'");
    }
  }
  if (pending) finish(*pending, fleet);
  if (fleet.empty()) {
    throw ParseError(0, "profile document contains no [[model]] blocks");
  }
  try {
    validate_fleet(fleet);
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
  return fleet;
}

void write_profiles(std::ostream& out, const Fleet& fleet) {
  auto real = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  auto triple = [&](const TokenCoeffs& c) {
    return "[" + real(c[0]) + ", " + real(c[1]) + ", " + real(c[2]) + "]";
  };
  bool first = true;
  for (const auto& p : fleet) {
    if (!first) out << '\n';
    first = false;
    out << "[[model]]\n"
        << "name = \"" << p.name << "\"\n"
        << "accuracy_const = " << real(p.accuracy_const) << '\n'
        << "alpha = " << triple(p.energy_coeffs) << '\n'
        << "beta = " << triple(p.runtime_coeffs) << '\n';
    if (p.capacity_fraction) out << "gamma = " << real(*p.capacity_fraction) << '\n';
  }
}

}  // namespace ecoroute
