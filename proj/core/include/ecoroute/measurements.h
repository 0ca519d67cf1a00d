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
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecoroute/types.h"

namespace ecoroute {

enum class Metric { kEnergy, kRuntime };

std::string_view to_string(Metric metric);
double metric_value(const MeasurementRecord& record, Metric metric);

// Reads CSV with header `model,tau_in,tau_out,energy_j,runtime_s,trial`.
std::vector<MeasurementRecord> parse_measurements(std::istream& in);
void write_measurements(std::ostream& out,
                        std::span<const MeasurementRecord> records);

// Records grouped by model name, in first-appearance order.
std::vector<std::pair<std::string, std::vector<MeasurementRecord>>>
group_by_model(std::span<const MeasurementRecord> records);

// Settings for a synthetic grid campaign: every (tau_in, tau_out) pair from
// `levels` x `levels`, `trials` replicates each, responses taken from the
// profile's token models and multiplied by (1 + noise * N(0, 1)).
struct CampaignSpec {
  std::vector<std::uint32_t> levels;
  std::uint32_t trials = 1;
  double relative_noise = 0.0;
  std::uint64_t seed = 0;
};

// Powers of two from lo to hi inclusive (both must be powers of two).
std::vector<std::uint32_t> power_of_two_levels(std::uint32_t lo,
                                               std::uint32_t hi);

std::vector<MeasurementRecord> synthesize_measurements(
    std::span<const ModelProfile> fleet, const CampaignSpec& spec);

}  // namespace ecoroute
