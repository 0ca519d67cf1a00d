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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ecoroute {

enum class ErrorKind {
  kParse,            // malformed input document
  kInvalidArgument,  // precondition on a value violated
  kInfeasible,       // routing constraints cannot be satisfied
  kNumeric,          // singular system, degenerate normalizer, ...
  kIo,               // file missing or unreadable
};

// Every library failure is reported through this type. `kind()` lets callers
// (the CLI in particular) map failures onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failure carrying the 1-based line of the offending input (0 if the
// failure is not tied to a line).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorKind::kParse, line == 0 ? message
                                           : "line " + std::to_string(line) +
                                                 ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ecoroute
