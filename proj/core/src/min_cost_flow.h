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
#include <vector>

namespace ecoroute::detail {

// Successive-shortest-path min-cost flow on a small residual network with
// real-valued costs and integer capacities.
class MinCostFlow {
 public:
  explicit MinCostFlow(std::size_t num_nodes);

  // Returns the index of the forward arc, usable with flow().
  std::size_t add_arc(std::size_t from, std::size_t to, long capacity, double cost);

  // Pushes up to `limit` units from source to sink along successive cheapest
  // paths and returns the amount pushed. The network must not contain a
  // negative-cost cycle.
  long run(std::size_t source, std::size_t sink, long limit);

  long flow(std::size_t arc) const { return arcs_[arc ^ 1].capacity; }

 private:
  struct Arc {
    std::size_t to;
    long capacity;
    double cost;
  };

  bool bellman_ford(std::size_t source);
  bool dijkstra(std::size_t source, std::size_t sink);

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<double> potential_;
  std::vector<double> dist_;
  std::vector<std::size_t> parent_arc_;
};

}  // namespace ecoroute::detail
