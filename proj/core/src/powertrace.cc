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

#include "ecoroute/powertrace.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "csv.h"
#include "ecoroute/error.h"
#include "ecoroute/stats.h"

namespace ecoroute::powertrace {
namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorKind::kInvalidArgument, message);
}

}  // namespace

double integrate_cpu_energy(std::span<const PowerSample> trace,
                            std::span<const ResidencyInterval> residency) {
  if (trace.empty()) invalid("power trace is empty");

  std::map<std::uint32_t, std::vector<const PowerSample*>> samples;
  for (const auto& s : trace) {
    if (!std::isfinite(s.time_s) || !std::isfinite(s.power_w) || s.power_w < 0) {
      invalid("power sample for core " + std::to_string(s.core_id) +
              " has non-finite time or invalid power");
    }
    auto& series = samples[s.core_id];
    if (!series.empty() && !(series.back()->time_s < s.time_s)) {
      invalid("samples for core " + std::to_string(s.core_id) +
              " are not strictly increasing in time");
    }
    series.push_back(&s);
  }

  std::map<std::uint32_t, std::vector<ResidencyInterval>> active;
  for (const auto& r : residency) {
    if (!std::isfinite(r.start_s) || !std::isfinite(r.end_s) ||
        !(r.start_s < r.end_s)) {
      invalid("residency interval for core " + std::to_string(r.core_id) +
              " needs start < end");
    }
    active[r.core_id].push_back(r);
  }

  std::string unknown;
  for (const auto& [core, intervals] : active) {
    if (!samples.contains(core)) {
      unknown += (unknown.empty() ? "" : ", ") + std::to_string(core);
    }
  }
  if (!unknown.empty()) {
    invalid("residency references cores absent from the power trace: " + unknown);
  }

  long double total = 0.0L;
  for (auto& [core, intervals] : active) {
    std::sort(intervals.begin(), intervals.end(),
              [](const auto& a, const auto& b) { return a.start_s < b.start_s; });
    for (std::size_t j = 1; j < intervals.size(); ++j) {
      if (intervals[j].start_s < intervals[j - 1].end_s) {
        invalid("overlapping residency intervals for core " + std::to_string(core));
      }
    }

    const auto& series = samples.at(core);
    std::size_t j = 0;
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
      const double lo = series[i]->time_s;
      const double hi = series[i + 1]->time_s;
      while (j < intervals.size() && intervals[j].end_s <= lo) ++j;
      for (std::size_t k = j; k < intervals.size() && intervals[k].start_s < hi; ++k) {
        const double overlap =
            std::min(hi, intervals[k].end_s) - std::max(lo, intervals[k].start_s);
        if (overlap > 0) {
          total += static_cast<long double>(series[i]->power_w) * overlap;
        }
      }
    }
  }
  return static_cast<double>(total);
}

double total_energy(double cpu_j, double gpu_j) {
  if (!std::isfinite(cpu_j) || !std::isfinite(gpu_j) || cpu_j < 0 || gpu_j < 0) {
    invalid("energy components must be finite and nonnegative");
  }
  return cpu_j + gpu_j;
}

StopDecision stopping_decision(std::span<const double> runtimes_s,
                               const StoppingRule& rule) {
  if (runtimes_s.empty()) invalid("no runtimes to decide on");
  if (!(rule.confidence > 0.0 && rule.confidence < 1.0)) {
    invalid("confidence must lie in (0, 1)");
  }
  if (!(rule.half_width_s >= 0.0)) invalid("half-width threshold must be >= 0");
  for (double r : runtimes_s) {
    if (!std::isfinite(r) || r < 0) invalid("runtimes must be finite and >= 0");
  }

  const std::size_t n = runtimes_s.size();
  long double sum = 0.0L;
  for (double r : runtimes_s) sum += r;
  const double mean = static_cast<double>(sum / n);

  StopDecision out;
  out.mean_runtime_s = mean;
  out.ci_half_width_s = std::numeric_limits<double>::infinity();
  if (n >= 2) {
    long double ss = 0.0L;
    for (double r : runtimes_s) ss += (r - mean) * static_cast<long double>(r - mean);
    const double sd = std::sqrt(static_cast<double>(ss / (n - 1)));
    const double t = stats::t_quantile(1.0 - (1.0 - rule.confidence) / 2.0,
                                       static_cast<double>(n - 1));
    out.ci_half_width_s = sd / std::sqrt(static_cast<double>(n)) * t;
  }

  if (n >= rule.max_trials) {
    out.verdict = Verdict::kStopMaxTrials;
  } else if (n >= 2 && out.ci_half_width_s <= rule.half_width_s) {
    out.verdict = Verdict::kStopConfident;
  } else {
    out.verdict = Verdict::kContinue;
  }
  return out;
}

std::vector<PowerSample> parse_timechart(std::istream& in) {
  detail::CsvReader reader(in, "time_s,core_id,power_w");
  std::vector<PowerSample> out;
  std::vector<std::string_view> f;
  while (reader.next(f)) {
    PowerSample s;
    s.time_s = detail::parse_real(f[0], reader.line(), "time_s");
    s.core_id = detail::parse_count(f[1], reader.line(), "core_id");
    s.power_w = detail::parse_real(f[2], reader.line(), "power_w");
    if (s.time_s < 0) throw ParseError(reader.line(), "time_s is negative");
    if (s.power_w < 0) throw ParseError(reader.line(), "power_w is negative");
    out.push_back(s);
  }
  return out;
}

std::vector<ResidencyInterval> parse_residency(std::istream& in) {
  detail::CsvReader reader(in, "core_id,start_s,end_s");
  std::vector<ResidencyInterval> out;
  std::vector<std::string_view> f;
  while (reader.next(f)) {
    ResidencyInterval r;
    r.core_id = detail::parse_count(f[0], reader.line(), "core_id");
    r.start_s = detail::parse_real(f[1], reader.line(), "start_s");
    r.end_s = detail::parse_real(f[2], reader.line(), "end_s");
    if (!(r.start_s < r.end_s)) {
      throw ParseError(reader.line(), "residency interval needs start_s < end_s");
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace ecoroute::powertrace
