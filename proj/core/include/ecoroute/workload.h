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
#include <ostream>
#include <string_view>
#include <variant>

#include "ecoroute/types.h"

namespace ecoroute {

// Reads a workload CSV with header `tau_in,tau_out`. Rejects negative or
// non-integer counts and (0, 0) rows, naming the offending line.
Workload parse_workload(std::istream& in);

// Inverse of parse_workload; always ends with a newline.
void write_workload(std::ostream& out, const Workload& workload);

// Every draw is a uniform integer in [lo, hi].
struct UniformTokens {
  std::uint32_t lo = 1;
  std::uint32_t hi = 1;
};

// exp(N(mu, sigma)) rounded to the nearest integer and clamped to [1, cap].
struct LognormalTokens {
  double mu = 0.0;
  double sigma = 1.0;
  std::uint32_t cap = 1;
};

using TokenDistribution = std::variant<UniformTokens, LognormalTokens>;

// Parses "uniform:LO,HI" or "lognormal:MU,SIGMA,CAP".
TokenDistribution parse_distribution(std::string_view spec);

// Draws `count` queries, sampling tau_in from `in_dist` and tau_out from
// `out_dist` independently. A pure function of its arguments; every token
// count is >= 1.
Workload generate_workload(std::size_t count, const TokenDistribution& in_dist,
                           const TokenDistribution& out_dist,
                           std::uint64_t seed);

inline Workload generate_workload(std::size_t count,
                                  const TokenDistribution& dist,
                                  std::uint64_t seed) {
  return generate_workload(count, dist, dist, seed);
}

}  // namespace ecoroute
