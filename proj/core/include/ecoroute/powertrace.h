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
#include <span>
#include <vector>

namespace ecoroute::powertrace {

// One timechart reading: core `core_id` drew `power_w` watts at `time_s`.
struct PowerSample {
  double time_s = 0.0;
  std::uint32_t core_id = 0;
  double power_w = 0.0;
};

// Core `core_id` was running the inference process during [start_s, end_s).
struct ResidencyInterval {
  std::uint32_t core_id = 0;
  double start_s = 0.0;
  double end_s = 0.0;
};

enum class Verdict { kContinue, kStopConfident, kStopMaxTrials };

struct StopDecision {
  Verdict verdict = Verdict::kContinue;
  double mean_runtime_s = 0.0;
  // Half-width of the two-sided t interval; +inf when fewer than 2 trials.
  double ci_half_width_s = 0.0;
};

// CPU energy attributed to the inference process, in joules.
//
// Power is piecewise constant: sample i of a core holds over [t_i, t_{i+1}),
// so the last sample of every core contributes nothing. Each step counts
// P_i times the length of its overlap with that core's residency intervals,
// and the per-core sums are added up.
//
// Throws Error(kInvalidArgument) on an empty trace, on samples of one core
// that are not strictly increasing in time, on negative or non-finite power,
// on malformed or overlapping residency intervals, and on residency for cores
// absent from the trace (all such core ids are listed).
double integrate_cpu_energy(std::span<const PowerSample> trace,
                            std::span<const ResidencyInterval> residency);

// CPU + GPU joules. Both must be finite and nonnegative.
double total_energy(double cpu_j, double gpu_j);

struct StoppingRule {
  double confidence = 0.95;
  double half_width_s = 0.5;
  std::size_t max_trials = 25;
};

// Decides whether another timing trial is needed. The cap on trials wins over
// everything; otherwise at least two trials are required and the run stops
// once the t-interval half-width s / sqrt(n) * t_{1-(1-c)/2, n-1} is within
// the rule's threshold.
StopDecision stopping_decision(std::span<const double> runtimes_s,
                               const StoppingRule& rule = {});

// Timechart CSV: `time_s,core_id,power_w`.
std::vector<PowerSample> parse_timechart(std::istream& in);
// Residency CSV: `core_id,start_s,end_s`.
std::vector<ResidencyInterval> parse_residency(std::istream& in);

}  // namespace ecoroute::powertrace
