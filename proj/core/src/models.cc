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

#include "ecoroute/models.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ecoroute/error.h"

namespace ecoroute {

double evaluate_token_model(const TokenCoeffs& coeffs, const Query& q) {
  const double in = q.tau_in;
  const double out = q.tau_out;
  return coeffs[0] * in + coeffs[1] * out + coeffs[2] * (in * out);
}

Normalizers compute_normalizers(std::span<const ModelProfile> fleet,
                                const Workload& workload) {
  if (fleet.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "fleet is empty");
  }
  if (workload.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "workload is empty");
  }
  double max_energy = -std::numeric_limits<double>::infinity();
  double max_accuracy = -std::numeric_limits<double>::infinity();
  for (const auto& profile : fleet) {
    for (const auto& q : workload) {
      max_energy = std::max(max_energy, predict_energy(profile, q));
      max_accuracy = std::max(max_accuracy, accuracy_score(profile, q));
    }
  }
  if (!(max_energy > 0.0)) {
    throw Error(ErrorKind::kNumeric,
                "largest predicted energy is not positive; the energy "
                "coefficients cannot be normalized");
  }
  if (!(max_accuracy > 0.0)) {
    throw Error(ErrorKind::kNumeric, "largest accuracy score is not positive");
  }
  return {max_energy, max_accuracy};
}

CostMatrix::CostMatrix(std::size_t num_queries, std::size_t num_models,
                       std::vector<double> entries, double zeta)
    : rows_(num_queries), cols_(num_models), entries_(std::move(entries)), zeta_(zeta) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::kInvalidArgument, "cost matrix has the wrong size");
  }
  for (double v : entries_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::kNumeric, "cost matrix entry is not finite");
    }
  }
}

double CostMatrix::objective(std::span<const std::size_t> model_of) const {
  if (model_of.size() != rows_) {
    throw Error(ErrorKind::kInvalidArgument,
                "assignment covers " + std::to_string(model_of.size()) +
                    " queries, cost matrix has " + std::to_string(rows_));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) total += at(i, model_of[i]);
  return total;
}

CostMatrix build_cost_matrix(std::span<const ModelProfile> fleet,
                             const Workload& workload, double zeta) {
  if (!(zeta >= 0.0 && zeta <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "zeta must lie in [0, 1]");
  }
  return build_cost_matrix(fleet, workload, zeta,
                           compute_normalizers(fleet, workload));
}

CostMatrix build_cost_matrix(std::span<const ModelProfile> fleet,
                             const Workload& workload, double zeta,
                             const Normalizers& norm) {
  if (!(zeta >= 0.0 && zeta <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "zeta must lie in [0, 1]");
  }
  std::vector<double> entries;
  entries.reserve(workload.size() * fleet.size());
  for (const auto& q : workload) {
    for (const auto& profile : fleet) {
      const double energy = predict_energy(profile, q) / norm.max_energy_j;
      const double accuracy = accuracy_score(profile, q) / norm.max_accuracy;
      entries.push_back(zeta * energy - (1.0 - zeta) * accuracy);
    }
  }
  return CostMatrix(workload.size(), fleet.size(), std::move(entries), zeta);
}

}  // namespace ecoroute
