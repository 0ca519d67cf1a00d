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
#include <cstdint>
#include <span>
#include <vector>

#include "ecoroute/models.h"
#include "ecoroute/types.h"

namespace ecoroute {

enum class CapacityMode {
  kUnbounded,    // no per-model cap
  kFractionCap,  // model K takes at most ceil(gamma_K * m) queries
};

struct RoutingConstraints {
  // Lower bound on |Q_K| for every model. The default of 1 turns the strict
  // "every model gets some queries" condition into a count.
  std::size_t min_per_model = 1;
  CapacityMode capacity_mode = CapacityMode::kUnbounded;
};

// Per-model count bounds derived from constraints for a workload of m queries.
struct CountBounds {
  std::vector<std::size_t> lower;
  std::vector<std::size_t> upper;
};

// Throws Error(kInvalidArgument) when kFractionCap is requested but some
// profile has no capacity fraction, and Error(kInfeasible) naming the violated
// aggregate when sum(lower) > m or sum(upper) < m.
CountBounds count_bounds(std::span<const ModelProfile> fleet, std::size_t m,
                         const RoutingConstraints& constraints);

struct Metrics {
  double total_energy_j = 0.0;
  double mean_runtime_s = 0.0;   // mean of per-query predicted runtimes
  double total_accuracy = 0.0;
  std::vector<std::size_t> per_model_counts;
  double objective_value = 0.0;  // sum of normalized costs at the evaluation zeta
};

struct RoutingResult {
  Assignment assignment;
  Metrics metrics;
};

// ---------------------------------------------------------------------------
// Matrix-level solvers. Both return the model index of every query.
// ---------------------------------------------------------------------------

// Exact minimum-cost assignment of every row of `costs` to one column such
// that column k receives between bounds.lower[k] and bounds.upper[k] rows.
// This is a transportation problem; it is solved by successive shortest paths
// on the bipartite flow network, with the lower bounds moved into node
// demands. Bellman-Ford seeds the potentials (costs may be negative), then
// every augmentation runs Dijkstra on reduced costs.
std::vector<std::size_t> solve_transportation(const CostMatrix& costs,
                                              const CountBounds& bounds);

// Exhaustive search over all num_models^num_queries assignments, keeping the
// lexicographically first among equal minima. Refuses instances with more
// than 10^7 candidates.
std::vector<std::size_t> brute_force_transportation(const CostMatrix& costs,
                                                    const CountBounds& bounds);

inline constexpr std::uint64_t kBruteForceLimit = 10'000'000;

// ---------------------------------------------------------------------------
// Fleet-level routing
// ---------------------------------------------------------------------------

RoutingResult solve_offline(std::span<const ModelProfile> fleet,
                            const Workload& workload, double zeta,
                            const RoutingConstraints& constraints = {});

RoutingResult brute_force(std::span<const ModelProfile> fleet,
                          const Workload& workload, double zeta,
                          const RoutingConstraints& constraints = {});

// Query i goes to model i mod |fleet|.
Assignment round_robin(const Workload& workload, std::span<const ModelProfile> fleet);
// Independent uniform draws, reproducible for a given seed.
Assignment random_assign(const Workload& workload,
                         std::span<const ModelProfile> fleet, std::uint64_t seed);
Assignment single_model(const Workload& workload,
                        std::span<const ModelProfile> fleet, std::size_t model);

// Physical and normalized totals of an assignment. The objective is taken
// from the cost matrix at `zeta`.
Metrics evaluate(const Assignment& assignment, std::span<const ModelProfile> fleet,
                 const Workload& workload, double zeta);

// True when the counts of `assignment` fall within `bounds`.
bool satisfies(const Assignment& assignment, const CountBounds& bounds);

struct SweepRow {
  double zeta = 0.0;
  Metrics metrics;
};

// One solve_offline per grid point, returned in grid order. `jobs` > 1 solves
// grid points on that many threads; the output does not depend on it.
std::vector<SweepRow> sweep_zeta(std::span<const ModelProfile> fleet,
                                 const Workload& workload,
                                 const RoutingConstraints& constraints,
                                 std::span<const double> grid, std::size_t jobs = 1);

// lo, lo + step, ... up to hi (inclusive within 1e-9), each rounded to 12
// decimals so that 0.1 * 3 prints as 0.3.
std::vector<double> make_grid(double lo, double hi, double step);

}  // namespace ecoroute
