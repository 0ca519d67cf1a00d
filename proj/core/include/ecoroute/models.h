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
#include <span>
#include <vector>

#include "ecoroute/types.h"

namespace ecoroute {

// Evaluates c0 * tau_in + c1 * tau_out + c2 * tau_in * tau_out.
double evaluate_token_model(const TokenCoeffs& coeffs, const Query& q);

// Predicted joules for serving `q` on `profile` (no intercept, so (0, 0)
// costs nothing). Negative fitted coefficients are allowed and may yield
// negative predictions.
inline double predict_energy(const ModelProfile& profile, const Query& q) {
  return evaluate_token_model(profile.energy_coeffs, q);
}

// Predicted seconds for serving `q` on `profile`.
inline double predict_runtime(const ModelProfile& profile, const Query& q) {
  return evaluate_token_model(profile.runtime_coeffs, q);
}

// Accuracy mass A_K * (tau_in + tau_out).
inline double accuracy_score(const ModelProfile& profile, const Query& q) {
  return profile.accuracy_const *
         (static_cast<double>(q.tau_in) + static_cast<double>(q.tau_out));
}

// Largest predicted energy and accuracy over every (model, query) pair of the
// current routing instance. Dividing by them maps both metrics onto [0, 1].
struct Normalizers {
  double max_energy_j = 1.0;
  double max_accuracy = 1.0;
};

// Throws Error(kInvalidArgument) on an empty fleet or workload and
// Error(kNumeric) when either maximum is not positive.
Normalizers compute_normalizers(std::span<const ModelProfile> fleet,
                                const Workload& workload);

// Dense m x |fleet| matrix of per-(query, model) routing costs
//   zeta * e_K(q) / max_energy - (1 - zeta) * a_K(q) / max_accuracy.
class CostMatrix {
 public:
  // Raw constructor used by tests and the matrix-level solvers. `entries` is
  // row-major with one row per query.
  CostMatrix(std::size_t num_queries, std::size_t num_models,
             std::vector<double> entries, double zeta = 0.0);

  std::size_t num_queries() const noexcept { return rows_; }
  std::size_t num_models() const noexcept { return cols_; }
  double zeta() const noexcept { return zeta_; }
  double at(std::size_t query, std::size_t model) const {
    return entries_[query * cols_ + model];
  }
  std::span<const double> row(std::size_t query) const {
    return std::span<const double>(entries_).subspan(query * cols_, cols_);
  }
  std::span<const double> entries() const noexcept { return entries_; }

  // Sum of the entries selected by `model_of`.
  double objective(std::span<const std::size_t> model_of) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
  double zeta_;
};

// Throws Error(kInvalidArgument) for zeta outside [0, 1]; propagates
// compute_normalizers errors.
CostMatrix build_cost_matrix(std::span<const ModelProfile> fleet,
                             const Workload& workload, double zeta);

CostMatrix build_cost_matrix(std::span<const ModelProfile> fleet,
                             const Workload& workload, double zeta,
                             const Normalizers& norm);

}  // namespace ecoroute
