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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ecoroute {

// An inference request, reduced to its input and output token counts.
struct Query {
  std::uint32_t tau_in = 0;
  std::uint32_t tau_out = 0;

  friend bool operator==(const Query&, const Query&) = default;
};

// Ordered multiset of queries. A query is identified by its position, so
// duplicates are distinct schedulable units.
class Workload {
 public:
  Workload() = default;
  // Throws Error(kInvalidArgument) if any query is (0, 0).
  explicit Workload(std::vector<Query> queries);

  std::size_t size() const noexcept { return queries_.size(); }
  bool empty() const noexcept { return queries_.empty(); }
  const Query& operator[](std::size_t i) const { return queries_[i]; }
  std::span<const Query> queries() const noexcept { return queries_; }

  auto begin() const noexcept { return queries_.begin(); }
  auto end() const noexcept { return queries_.end(); }

  friend bool operator==(const Workload&, const Workload&) = default;

 private:
  std::vector<Query> queries_;
};

// Coefficients of a no-intercept bilinear token model:
//   c0 * tau_in + c1 * tau_out + c2 * tau_in * tau_out
using TokenCoeffs = std::array<double, 3>;

// One hosted LLM.
struct ModelProfile {
  std::string name;
  double accuracy_const = 0.0;  // leaderboard average accuracy, percent
  TokenCoeffs energy_coeffs{};  // J/token, J/token, J/token^2
  TokenCoeffs runtime_coeffs{};  // s/token, s/token, s/token^2
  // Share of the workload this model's partition can absorb. Absent means
  // the model is uncapped.
  std::optional<double> capacity_fraction;
};

using Fleet = std::vector<ModelProfile>;

// Checks accuracy constants, name uniqueness and, when every profile carries
// a capacity fraction, that the fractions sum to 1 within 1e-9.
void validate_fleet(std::span<const ModelProfile> fleet);

// Total map from query index to model index. The only way to build one is
// from a complete vector, so the per-model sets always partition the workload.
class Assignment {
 public:
  // Throws Error(kInvalidArgument) when an entry is >= num_models.
  Assignment(std::vector<std::size_t> model_of, std::size_t num_models);

  std::size_t num_queries() const noexcept { return model_of_.size(); }
  std::size_t num_models() const noexcept { return num_models_; }
  std::size_t model_of(std::size_t query) const { return model_of_[query]; }
  std::span<const std::size_t> model_of() const noexcept { return model_of_; }

  // m_K for every model.
  std::vector<std::size_t> counts() const;
  // Q_K as ascending query indices.
  std::vector<std::size_t> queries_of(std::size_t model) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::size_t> model_of_;
  std::size_t num_models_;
};

// One measured inference run.
struct MeasurementRecord {
  std::string model_name;
  std::uint32_t tau_in = 0;
  std::uint32_t tau_out = 0;
  double energy_j = 0.0;   // CPU + GPU
  double runtime_s = 0.0;
  std::uint32_t trial = 1;
};

}  // namespace ecoroute
