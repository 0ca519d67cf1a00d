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

#include "ecoroute/scheduler.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "ecoroute/error.h"
#include "min_cost_flow.h"

namespace ecoroute {
namespace {

void check_bounds(const CostMatrix& costs, const CountBounds& bounds) {
  const std::size_t m = costs.num_queries();
  const std::size_t k = costs.num_models();
  if (m == 0) throw Error(ErrorKind::kInvalidArgument, "workload is empty");
  if (k == 0) throw Error(ErrorKind::kInvalidArgument, "fleet is empty");
  if (bounds.lower.size() != k || bounds.upper.size() != k) {
    throw Error(ErrorKind::kInvalidArgument, "count bounds do not match the fleet");
  }
  std::size_t sum_lower = 0;
  std::size_t sum_upper = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (bounds.lower[j] > bounds.upper[j]) {
      throw Error(ErrorKind::kInfeasible,
                  "model " + std::to_string(j) + " has minimum " +
                      std::to_string(bounds.lower[j]) + " above its cap " +
                      std::to_string(bounds.upper[j]));
    }
    sum_lower += bounds.lower[j];
    sum_upper += std::min(bounds.upper[j], m);
  }
  if (sum_lower > m) {
    throw Error(ErrorKind::kInfeasible,
                "per-model minimums sum to " + std::to_string(sum_lower) +
                    " but the workload has only " + std::to_string(m) + " queries");
  }
  if (sum_upper < m) {
    throw Error(ErrorKind::kInfeasible,
                "capacity caps sum to " + std::to_string(sum_upper) +
                    ", fewer than the " + std::to_string(m) + " queries");
  }
}

}  // namespace

CountBounds count_bounds(std::span<const ModelProfile> fleet, std::size_t m,
                         const RoutingConstraints& constraints) {
  CountBounds bounds;
  bounds.lower.assign(fleet.size(), constraints.min_per_model);
  bounds.upper.assign(fleet.size(), m);
  if (constraints.capacity_mode == CapacityMode::kFractionCap) {
    for (std::size_t k = 0; k < fleet.size(); ++k) {
      const auto& gamma = fleet[k].capacity_fraction;
      if (!gamma) {
        throw Error(ErrorKind::kInvalidArgument,
                    "capacity caps requested but '" + fleet[k].name +
                        "' has no capacity fraction");
      }
      // The slack keeps 0.05 * 500 at 25 despite binary rounding.
      const double cap = std::ceil(*gamma * static_cast<double>(m) - 1e-9);
      bounds.upper[k] = static_cast<std::size_t>(
          std::clamp(cap, 0.0, static_cast<double>(m)));
    }
  }
  std::size_t sum_lower = 0;
  std::size_t sum_upper = 0;
  for (std::size_t k = 0; k < fleet.size(); ++k) {
    sum_lower += bounds.lower[k];
    sum_upper += bounds.upper[k];
  }
  if (sum_lower > m) {
    throw Error(ErrorKind::kInfeasible,
                "min_per_model " + std::to_string(constraints.min_per_model) +
                    " x " + std::to_string(fleet.size()) + " models = " +
                    std::to_string(sum_lower) + " exceeds the " +
                    std::to_string(m) + " queries");
  }
  if (sum_upper < m) {
    throw Error(ErrorKind::kInfeasible,
                "capacity caps sum to " + std::to_string(sum_upper) +
                    ", fewer than the " + std::to_string(m) + " queries");
  }
  for (std::size_t k = 0; k < fleet.size(); ++k) {
    if (bounds.lower[k] > bounds.upper[k]) {
      throw Error(ErrorKind::kInfeasible,
                  "model '" + fleet[k].name + "' has cap " +
                      std::to_string(bounds.upper[k]) + " below min_per_model " +
                      std::to_string(bounds.lower[k]));
    }
  }
  return bounds;
}

std::vector<std::size_t> solve_transportation(const CostMatrix& costs,
                                              const CountBounds& bounds) {
  check_bounds(costs, bounds);
  const std::size_t m = costs.num_queries();
  const std::size_t k = costs.num_models();

  // Nodes: source, m queries, k models, collector, sink. Model j sends its
  // mandatory lower[j] units straight to the sink and the optional rest
  // through the collector, whose arc to the sink carries what remains after
  // all minimums. A flow of value m therefore meets every bound.
  const std::size_t source = 0;
  const std::size_t first_query = 1;
  const std::size_t first_model = first_query + m;
  const std::size_t collector = first_model + k;
  const std::size_t sink = collector + 1;
  detail::MinCostFlow network(sink + 1);

  std::size_t sum_lower = 0;
  for (auto lo : bounds.lower) sum_lower += lo;

  for (std::size_t i = 0; i < m; ++i) network.add_arc(source, first_query + i, 1, 0.0);
  std::vector<std::size_t> choice_arc(m * k);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      choice_arc[i * k + j] =
          network.add_arc(first_query + i, first_model + j, 1, costs.at(i, j));
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    const auto upper = std::min(bounds.upper[j], m);
    network.add_arc(first_model + j, sink, static_cast<long>(bounds.lower[j]), 0.0);
    network.add_arc(first_model + j, collector,
                    static_cast<long>(upper - bounds.lower[j]), 0.0);
  }
  network.add_arc(collector, sink, static_cast<long>(m - sum_lower), 0.0);

  const long pushed = network.run(source, sink, static_cast<long>(m));
  if (pushed != static_cast<long>(m)) {
    throw Error(ErrorKind::kInfeasible, "no assignment satisfies the count bounds");
  }

  std::vector<std::size_t> model_of(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (network.flow(choice_arc[i * k + j]) == 1) {
        model_of[i] = j;
        break;
      }
    }
  }
  return model_of;
}

std::vector<std::size_t> brute_force_transportation(const CostMatrix& costs,
                                                    const CountBounds& bounds) {
  check_bounds(costs, bounds);
  const std::size_t m = costs.num_queries();
  const std::size_t k = costs.num_models();
  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < m; ++i) {
    candidates *= k;
    if (candidates > kBruteForceLimit) {
      throw Error(ErrorKind::kInvalidArgument,
                  "instance too large for exhaustive search (" + std::to_string(k) +
                      "^" + std::to_string(m) + " > 10^7)");
    }
  }

  std::vector<std::size_t> current(m, 0);
  std::vector<std::size_t> counts(k, 0);
  counts[0] = m;
  std::vector<std::size_t> best;
  double best_value = std::numeric_limits<double>::infinity();
  while (true) {
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      ok = counts[j] >= bounds.lower[j] && counts[j] <= bounds.upper[j];
    }
    if (ok) {
      const double value = costs.objective(current);
      if (value < best_value) {
        best_value = value;
        best = current;
      }
    }
    // Odometer step, last position fastest: lexicographic order.
    std::size_t pos = m;
    bool advanced = false;
    while (pos > 0) {
      --pos;
      --counts[current[pos]];
      if (current[pos] + 1 < k) {
        ++current[pos];
        ++counts[current[pos]];
        advanced = true;
        break;
      }
      current[pos] = 0;
      ++counts[0];
    }
    if (!advanced) break;
  }
  if (best.empty()) {
    throw Error(ErrorKind::kInfeasible, "no assignment satisfies the count bounds");
  }
  return best;
}

namespace {

RoutingResult route_with(std::span<const ModelProfile> fleet,
                         const Workload& workload, double zeta,
                         const RoutingConstraints& constraints, bool exhaustive) {
  if (workload.empty()) throw Error(ErrorKind::kInvalidArgument, "workload is empty");
  if (fleet.empty()) throw Error(ErrorKind::kInvalidArgument, "fleet is empty");
  const auto bounds = count_bounds(fleet, workload.size(), constraints);
  const auto costs = build_cost_matrix(fleet, workload, zeta);
  auto model_of = exhaustive ? brute_force_transportation(costs, bounds)
                             : solve_transportation(costs, bounds);
  Assignment assignment(std::move(model_of), fleet.size());
  auto metrics = evaluate(assignment, fleet, workload, zeta);
  return {std::move(assignment), std::move(metrics)};
}

}  // namespace

RoutingResult solve_offline(std::span<const ModelProfile> fleet,
                            const Workload& workload, double zeta,
                            const RoutingConstraints& constraints) {
  return route_with(fleet, workload, zeta, constraints, false);
}

RoutingResult brute_force(std::span<const ModelProfile> fleet,
                          const Workload& workload, double zeta,
                          const RoutingConstraints& constraints) {
  return route_with(fleet, workload, zeta, constraints, true);
}

Assignment round_robin(const Workload& workload, std::span<const ModelProfile> fleet) {
  if (fleet.empty()) throw Error(ErrorKind::kInvalidArgument, "fleet is empty");
  std::vector<std::size_t> model_of(workload.size());
  for (std::size_t i = 0; i < model_of.size(); ++i) model_of[i] = i % fleet.size();
  return Assignment(std::move(model_of), fleet.size());
}

Assignment random_assign(const Workload& workload,
                         std::span<const ModelProfile> fleet, std::uint64_t seed) {
  if (fleet.empty()) throw Error(ErrorKind::kInvalidArgument, "fleet is empty");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, fleet.size() - 1);
  std::vector<std::size_t> model_of(workload.size());
  for (auto& k : model_of) k = pick(rng);
  return Assignment(std::move(model_of), fleet.size());
}

Assignment single_model(const Workload& workload,
                        std::span<const ModelProfile> fleet, std::size_t model) {
  if (model >= fleet.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "model index " + std::to_string(model) + " out of range for a fleet of " +
                    std::to_string(fleet.size()));
  }
  return Assignment(std::vector<std::size_t>(workload.size(), model), fleet.size());
}

Metrics evaluate(const Assignment& assignment, std::span<const ModelProfile> fleet,
                 const Workload& workload, double zeta) {
  if (assignment.num_queries() != workload.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "assignment covers " + std::to_string(assignment.num_queries()) +
                    " queries but the workload has " + std::to_string(workload.size()));
  }
  if (assignment.num_models() != fleet.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "assignment is over " + std::to_string(assignment.num_models()) +
                    " models but the fleet has " + std::to_string(fleet.size()));
  }
  const auto costs = build_cost_matrix(fleet, workload, zeta);
  Metrics metrics;
  long double energy = 0.0L;
  long double runtime = 0.0L;
  long double accuracy = 0.0L;
  for (std::size_t i = 0; i < workload.size(); ++i) {
    const auto& profile = fleet[assignment.model_of(i)];
    energy += predict_energy(profile, workload[i]);
    runtime += predict_runtime(profile, workload[i]);
    accuracy += accuracy_score(profile, workload[i]);
  }
  metrics.total_energy_j = static_cast<double>(energy);
  metrics.mean_runtime_s = static_cast<double>(runtime / workload.size());
  metrics.total_accuracy = static_cast<double>(accuracy);
  metrics.per_model_counts = assignment.counts();
  metrics.objective_value = costs.objective(assignment.model_of());
  return metrics;
}

bool satisfies(const Assignment& assignment, const CountBounds& bounds) {
  const auto counts = assignment.counts();
  if (counts.size() != bounds.lower.size()) return false;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] < bounds.lower[k] || counts[k] > bounds.upper[k]) return false;
  }
  return true;
}

std::vector<SweepRow> sweep_zeta(std::span<const ModelProfile> fleet,
                                 const Workload& workload,
                                 const RoutingConstraints& constraints,
                                 std::span<const double> grid, std::size_t jobs) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= 1.0)) {
      throw Error(ErrorKind::kInvalidArgument, "zeta grid values must lie in [0, 1]");
    }
    if (i > 0 && grid[i] < grid[i - 1]) {
      throw Error(ErrorKind::kInvalidArgument, "zeta grid must be sorted ascending");
    }
  }
  // Surface constraint errors before spawning work.
  count_bounds(fleet, workload.size(), constraints);

  std::vector<SweepRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        rows[i].zeta = grid[i];
        rows[i].metrics = solve_offline(fleet, workload, grid[i], constraints).metrics;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(grid.size(), 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<double> make_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw Error(ErrorKind::kInvalidArgument, "grid needs lo <= hi and step > 0");
  }
  std::vector<double> grid;
  for (std::size_t i = 0;; ++i) {
    const double v = lo + static_cast<double>(i) * step;
    if (v > hi + 1e-9) break;
    grid.push_back(std::min(std::round(v * 1e12) / 1e12, hi));
  }
  return grid;
}

}  // namespace ecoroute
