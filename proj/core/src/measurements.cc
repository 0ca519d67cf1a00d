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

#include "ecoroute/measurements.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "csv.h"
#include "ecoroute/error.h"
#include "ecoroute/models.h"

namespace ecoroute {

std::string_view to_string(Metric metric) {
  return metric == Metric::kEnergy ? "energy" : "runtime";
}

double metric_value(const MeasurementRecord& record, Metric metric) {
  return metric == Metric::kEnergy ? record.energy_j : record.runtime_s;
}

std::vector<MeasurementRecord> parse_measurements(std::istream& in) {
  detail::CsvReader reader(in, "model,tau_in,tau_out,energy_j,runtime_s,trial");
  std::vector<MeasurementRecord> records;
  std::vector<std::string_view> f;
  while (reader.next(f)) {
    const auto line = reader.line();
    MeasurementRecord r;
    if (f[0].empty()) throw ParseError(line, "empty model name");
    r.model_name = std::string(f[0]);
    r.tau_in = detail::parse_count(f[1], line, "tau_in");
    r.tau_out = detail::parse_count(f[2], line, "tau_out");
    r.energy_j = detail::parse_real(f[3], line, "energy_j");
    r.runtime_s = detail::parse_real(f[4], line, "runtime_s");
    r.trial = detail::parse_count(f[5], line, "trial");
    if (r.energy_j < 0) throw ParseError(line, "energy_j is negative");
    if (r.runtime_s < 0) throw ParseError(line, "runtime_s is negative");
    if (r.trial < 1) throw ParseError(line, "trial must be >= 1");
    records.push_back(std::move(r));
  }
  return records;
}

void write_measurements(std::ostream& out,
                        std::span<const MeasurementRecord> records) {
  out << "model,tau_in,tau_out,energy_j,runtime_s,trial\n";
  char energy[64];
  char runtime[64];
  for (const auto& r : records) {
    std::snprintf(energy, sizeof(energy), "%.17g", r.energy_j);
    std::snprintf(runtime, sizeof(runtime), "%.17g", r.runtime_s);
    out << r.model_name << ',' << r.tau_in << ',' << r.tau_out << ',' << energy
        << ',' << runtime << ',' << r.trial << '\n';
  }
}

std::vector<std::pair<std::string, std::vector<MeasurementRecord>>>
group_by_model(std::span<const MeasurementRecord> records) {
  std::vector<std::pair<std::string, std::vector<MeasurementRecord>>> groups;
  std::map<std::string, std::size_t> slot;
  for (const auto& r : records) {
    auto [it, inserted] = slot.emplace(r.model_name, groups.size());
    if (inserted) groups.emplace_back(r.model_name, std::vector<MeasurementRecord>{});
    groups[it->second].second.push_back(r);
  }
  return groups;
}

std::vector<std::uint32_t> power_of_two_levels(std::uint32_t lo,
                                               std::uint32_t hi) {
  auto is_pow2 = [](std::uint32_t v) { return v != 0 && (v & (v - 1)) == 0; };
  if (!is_pow2(lo) || !is_pow2(hi) || lo > hi) {
    throw Error(ErrorKind::kInvalidArgument,
                "level bounds must be powers of two with lo <= hi");
  }
  std::vector<std::uint32_t> levels;
  for (std::uint64_t v = lo; v <= hi; v *= 2) {
    levels.push_back(static_cast<std::uint32_t>(v));
  }
  return levels;
}

std::vector<MeasurementRecord> synthesize_measurements(
    std::span<const ModelProfile> fleet, const CampaignSpec& spec) {
  if (spec.levels.empty() || spec.trials < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "campaign needs at least one level and one trial");
  }
  if (!(spec.relative_noise >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "noise must be nonnegative");
  }
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<MeasurementRecord> records;
  records.reserve(fleet.size() * spec.levels.size() * spec.levels.size() *
                  spec.trials);
  for (const auto& profile : fleet) {
    for (auto tau_in : spec.levels) {
      for (auto tau_out : spec.levels) {
        const Query q{tau_in, tau_out};
        const double energy = predict_energy(profile, q);
        const double runtime = predict_runtime(profile, q);
        for (std::uint32_t t = 1; t <= spec.trials; ++t) {
          MeasurementRecord r;
          r.model_name = profile.name;
          r.tau_in = tau_in;
          r.tau_out = tau_out;
          r.energy_j = std::max(0.0, energy * (1.0 + spec.relative_noise * normal(rng)));
          r.runtime_s = std::max(0.0, runtime * (1.0 + spec.relative_noise * normal(rng)));
          r.trial = t;
          records.push_back(std::move(r));
        }
      }
    }
  }
  return records;
}

}  // namespace ecoroute
