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

#include "ecoroute/types.h"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <string>

#include "csv.h"
#include "ecoroute/error.h"

namespace ecoroute {

void validate_fleet(std::span<const ModelProfile> fleet) {
  std::set<std::string> names;
  std::size_t with_fraction = 0;
  double fraction_sum = 0.0;
  for (const auto& p : fleet) {
    if (p.name.empty()) {
      throw Error(ErrorKind::kInvalidArgument, "model profile without a name");
    }
    if (!names.insert(p.name).second) {
      throw Error(ErrorKind::kInvalidArgument,
                  "duplicate model name '" + p.name + "'");
    }
    if (!(p.accuracy_const > 0.0 && p.accuracy_const <= 100.0)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "accuracy_const of '" + p.name + "' must lie in (0, 100]");
    }
    for (double c : p.energy_coeffs) {
      if (!std::isfinite(c)) {
        throw Error(ErrorKind::kInvalidArgument,
                    "non-finite energy coefficient in '" + p.name + "'");
      }
    }
    for (double c : p.runtime_coeffs) {
      if (!std::isfinite(c)) {
        throw Error(ErrorKind::kInvalidArgument,
                    "non-finite runtime coefficient in '" + p.name + "'");
      }
    }
    if (p.capacity_fraction) {
      const double g = *p.capacity_fraction;
      if (!(g > 0.0 && g <= 1.0)) {
        throw Error(ErrorKind::kInvalidArgument,
                    "capacity fraction of '" + p.name + "' must lie in (0, 1]");
      }
      ++with_fraction;
      fraction_sum += g;
    }
  }
  if (!fleet.empty() && with_fraction == fleet.size() &&
      std::fabs(fraction_sum - 1.0) > 1e-9) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", fraction_sum);
    throw Error(ErrorKind::kInvalidArgument,
                std::string("capacity fractions sum to ") + buf);
  }
}

Assignment::Assignment(std::vector<std::size_t> model_of,
                       std::size_t num_models)
    : model_of_(std::move(model_of)), num_models_(num_models) {
  for (std::size_t i = 0; i < model_of_.size(); ++i) {
    if (model_of_[i] >= num_models_) {
      throw Error(ErrorKind::kInvalidArgument,
                  "query " + std::to_string(i) + " assigned to model " +
                      std::to_string(model_of_[i]) + " of " +
                      std::to_string(num_models_));
    }
  }
}

std::vector<std::size_t> Assignment::counts() const {
  std::vector<std::size_t> out(num_models_, 0);
  for (auto k : model_of_) ++out[k];
  return out;
}

std::vector<std::size_t> Assignment::queries_of(std::size_t model) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < model_of_.size(); ++i) {
    if (model_of_[i] == model) out.push_back(i);
  }
  return out;
}

}  // namespace ecoroute
