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

#include "min_cost_flow.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <utility>

namespace ecoroute::detail {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

}  // namespace

MinCostFlow::MinCostFlow(std::size_t num_nodes)
    : out_(num_nodes),
      potential_(num_nodes, 0.0),
      dist_(num_nodes, kInf),
      parent_arc_(num_nodes, kNone) {}

std::size_t MinCostFlow::add_arc(std::size_t from, std::size_t to, long capacity,
                                 double cost) {
  const std::size_t id = arcs_.size();
  arcs_.push_back({to, capacity, cost});
  arcs_.push_back({from, 0, -cost});
  out_[from].push_back(id);
  out_[to].push_back(id + 1);
  return id;
}

bool MinCostFlow::bellman_ford(std::size_t source) {
  std::fill(potential_.begin(), potential_.end(), kInf);
  potential_[source] = 0.0;
  const std::size_t n = out_.size();
  for (std::size_t round = 0; round + 1 < n; ++round) {
    bool changed = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (potential_[u] == kInf) continue;
      for (auto id : out_[u]) {
        const auto& arc = arcs_[id];
        if (arc.capacity > 0 && potential_[u] + arc.cost < potential_[arc.to]) {
          potential_[arc.to] = potential_[u] + arc.cost;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  // Unreachable nodes keep potential 0; they stay unreachable in Dijkstra.
  for (auto& p : potential_) {
    if (p == kInf) p = 0.0;
  }
  return true;
}

bool MinCostFlow::dijkstra(std::size_t source, std::size_t sink) {
  std::fill(dist_.begin(), dist_.end(), kInf);
  std::fill(parent_arc_.begin(), parent_arc_.end(), kNone);
  using Label = std::pair<double, std::size_t>;
  // Ties in distance settle the lower node index first, which keeps the
  // choice among equal-cost paths deterministic.
  std::priority_queue<Label, std::vector<Label>, std::greater<>> heap;
  dist_[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > dist_[u]) continue;
    for (auto id : out_[u]) {
      const auto& arc = arcs_[id];
      if (arc.capacity <= 0) continue;
      // Rounding can leave reduced costs a hair below zero.
      const double reduced =
          std::max(0.0, arc.cost + potential_[u] - potential_[arc.to]);
      const double candidate = d + reduced;
      if (candidate < dist_[arc.to]) {
        dist_[arc.to] = candidate;
        parent_arc_[arc.to] = id;
        heap.emplace(candidate, arc.to);
      }
    }
  }
  if (dist_[sink] == kInf) return false;
  for (std::size_t v = 0; v < out_.size(); ++v) {
    if (dist_[v] != kInf) potential_[v] += dist_[v];
  }
  return true;
}

long MinCostFlow::run(std::size_t source, std::size_t sink, long limit) {
  bellman_ford(source);
  long pushed = 0;
  while (pushed < limit && dijkstra(source, sink)) {
    long bottleneck = limit - pushed;
    for (std::size_t v = sink; v != source;) {
      const auto id = parent_arc_[v];
      bottleneck = std::min(bottleneck, arcs_[id].capacity);
      v = arcs_[id ^ 1].to;
    }
    for (std::size_t v = sink; v != source;) {
      const auto id = parent_arc_[v];
      arcs_[id].capacity -= bottleneck;
      arcs_[id ^ 1].capacity += bottleneck;
      v = arcs_[id ^ 1].to;
    }
    pushed += bottleneck;
  }
  return pushed;
}

}  // namespace ecoroute::detail
